import { ApiClient } from "./api.js";
import { AtlasApp } from "./app.js";

const root = document.getElementById("app");
if (root) {
  const app = new AtlasApp(root, new ApiClient());
  void app.init();
}
