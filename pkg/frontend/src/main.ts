import { ApiClient } from "./api.js";
import { actionForKey } from "./keyboard.js";
import { render } from "./render.js";
import { AnnotationSession } from "./state.js";
import { CATEGORIES } from "./categories.js";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app root element");
}

const api = new ApiClient(window.location.origin, (input, init) =>
  fetch(input, init),
);

const handlers = {
  onToggle: (value: string) => session.toggle(value),
  onSubmit: () => void session.submit(),
  onRetry: () => void session.loadNext(),
};

const session = new AnnotationSession(api, (view) => render(root, view, handlers));

window.addEventListener("keydown", (event) => {
  const target = event.target;
  const action = actionForKey({
    key: event.key,
    ctrl: event.ctrlKey,
    meta: event.metaKey,
    alt: event.altKey,
    fromInput:
      target instanceof HTMLInputElement ||
      target instanceof HTMLTextAreaElement ||
      target instanceof HTMLSelectElement,
  });
  if (!action) {
    return;
  }
  event.preventDefault();
  if (action.kind === "submit") {
    void session.submit();
  } else {
    session.toggle(CATEGORIES[action.index].value);
  }
});

void session.start();
