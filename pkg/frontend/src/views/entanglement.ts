/** Agility-course screen: both cats' courses, action buttons for the cat
 *  under player control, and the decoherence meter. */

import { button, clear, el } from "../dom.js";
import { meterPercent, outcomeLine } from "../viewmodel.js";
import type { EntanglementSessionView, ObstacleJson } from "../types.js";

const ACTIONS = ["Jump", "Crawl", "Balance", "Weave", "Climb", "Pause"];

export interface EntanglementHandlers {
  onAction: (action: string) => void;
  onReset: () => void;
  onBack: () => void;
}

function renderCourse(
  title: string,
  course: ObstacleJson[],
  position: number,
  catEmoji: string,
): HTMLElement {
  const lane = el("div", "course-lane");
  lane.append(el("div", "lane-title", title));
  const track = el("div", "track");
  course.forEach((obstacle, index) => {
    const cellClass =
      index < position ? "obstacle cleared" : index === position ? "obstacle next" : "obstacle";
    const cell = el("div", cellClass, obstacle.label);
    if (index === position) {
      cell.prepend(el("span", "runner", catEmoji + " "));
    }
    track.append(cell);
  });
  lane.append(track);
  return lane;
}

export function renderEntanglement(
  root: HTMLElement,
  view: EntanglementSessionView,
  handlers: EntanglementHandlers,
): void {
  clear(root);
  const header = el("header", "topbar");
  header.append(button("← levels", handlers.onBack, "btn back"));
  header.append(el("h1", "title", `Entanglement level ${view.level_id}`));
  header.append(
    el("div", "points-badge", `${view.mode} · synced ${view.synced_count}`),
  );
  root.append(header);

  if (view.intro_popup) {
    root.append(el("div", "popup", view.intro_popup));
  }

  root.append(renderCourse("your cat", view.course_a, view.position, "\u{1f431}"));
  root.append(
    renderCourse("entangled partner", view.course_b, view.position, "\u{1f408}"),
  );

  if (view.decoherence_enabled) {
    const meter = el("div", "meter");
    meter.append(el("div", "meter-label", `decoherence ${view.decoherence}/100`));
    const bar = el("div", "meter-bar");
    const fill = el("div", "meter-fill");
    fill.style.width = `${meterPercent(view)}%`;
    bar.append(fill);
    meter.append(bar);
    root.append(meter);
  } else {
    root.append(
      el(
        "div",
        "meter-label",
        `wrong moves: ${view.wrong_count}/${view.wrong_move_limit}`,
      ),
    );
  }

  const controls = el("div", "gate-row");
  for (const action of ACTIONS) {
    controls.append(button(action, () => handlers.onAction(action), "btn gate"));
  }
  controls.append(button("reset", handlers.onReset, "btn subtle"));
  root.append(controls);

  const outcome = outcomeLine(view);
  if (outcome) {
    root.append(el("div", "outcome", outcome));
  }
}
