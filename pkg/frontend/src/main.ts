import { ApiClient } from "./api";
import { render } from "./render";
import { ExplorerStore } from "./state";

const container = document.getElementById("app");
if (!container) {
  throw new Error("missing #app container");
}

const store = new ExplorerStore(new ApiClient(""));
store.subscribe((state) => render(state, store, container));
void store.load();
