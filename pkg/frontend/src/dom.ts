/** Tiny DOM helpers used by every view. */

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

export function clear(node: HTMLElement): HTMLElement {
  node.replaceChildren();
  return node;
}

export function button(
  label: string,
  onClick: () => void,
  className = "btn",
  title?: string,
): HTMLButtonElement {
  const node = el("button", className, label);
  if (title) {
    node.title = title;
  }
  node.addEventListener("click", onClick);
  return node;
}
