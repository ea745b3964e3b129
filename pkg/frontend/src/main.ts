/** Browser bootstrap: resolve the annotator id, mount the controller. */

import { ApiClient } from "./api.js";
import { StorageDraftStore } from "./model.js";
import { AnnotationController } from "./controller.js";

const ANNOTATOR_KEY = "mteval-annotator-id";

function resolveAnnotator(): string {
  const saved = window.localStorage.getItem(ANNOTATOR_KEY);
  if (saved) {
    return saved;
  }
  let entered: string | null = null;
  while (!entered) {
    entered = window.prompt("Annotator id (used to track your progress):");
  }
  const id = entered.trim();
  window.localStorage.setItem(ANNOTATOR_KEY, id);
  return id;
}

const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app mount point");
}
const controller = new AnnotationController(
  new ApiClient(""),
  new StorageDraftStore(window.localStorage),
  root,
  resolveAnnotator(),
);
void controller.start();
