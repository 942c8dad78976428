import { App } from "./app.js";
import { ReviewApi } from "./api.js";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app mount point");
}
const app = new App(root, new ReviewApi(""));
void app.init();
