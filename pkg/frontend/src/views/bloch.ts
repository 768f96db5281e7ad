/** Bloch sphere screen: the sphere with cat/mouse markers plus gate buttons
 *  whose tooltips explain each gate's movement on the sphere. */

import { button, clear, el } from "../dom.js";
import { drawBlochSphere } from "../sphere.js";
import { outcomeLine } from "../viewmodel.js";
import type { BlochSessionView } from "../types.js";

export interface BlochHandlers {
  onGate: (gate: string) => void;
  onReset: () => void;
  onBack: () => void;
}

export function renderBloch(
  root: HTMLElement,
  view: BlochSessionView,
  handlers: BlochHandlers,
): void {
  clear(root);
  const header = el("header", "topbar");
  header.append(button("← levels", handlers.onBack, "btn back"));
  header.append(el("h1", "title", `Bloch level ${view.level_id}`));
  header.append(el("div", "points-badge", `moves: ${view.move_count}`));
  root.append(header);

  if (view.intro_popup) {
    root.append(el("div", "popup", view.intro_popup));
  }

  const stage = el("div", "bloch-stage");
  const canvas = el("canvas", "sphere-canvas");
  canvas.width = 420;
  canvas.height = 420;
  stage.append(canvas);
  root.append(stage);
  drawBlochSphere(canvas, view.current_bloch, view.target_bloch);

  const controls = el("div", "gate-row");
  for (const gate of view.allowed_gates) {
    controls.append(
      button(
        gate,
        () => handlers.onGate(gate),
        "btn gate",
        view.tooltips[gate] ?? gate,
      ),
    );
  }
  controls.append(button("reset", handlers.onReset, "btn subtle"));
  root.append(controls);

  if (view.hint) {
    root.append(el("div", "hint", `hint: ${view.hint}`));
  }
  const outcome = outcomeLine(view);
  if (outcome) {
    root.append(el("div", "outcome", outcome));
  }
}
