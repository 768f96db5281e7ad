/** Level-select grid shared by all three games. */

import { button, clear, el } from "../dom.js";
import { levelCardLabel } from "../viewmodel.js";
import type { GameId, LevelSummary } from "../types.js";

export function renderLevelSelect(
  root: HTMLElement,
  gameId: GameId,
  levels: LevelSummary[],
  onPick: (levelId: number) => void,
  onBack: () => void,
): void {
  clear(root);
  const header = el("header", "topbar");
  header.append(button("← cat tree", onBack, "btn back"));
  header.append(el("h1", "title", `${gameId} levels`));
  root.append(header);

  const grid = el("div", "level-grid");
  for (const level of levels) {
    const card = el(
      "div",
      "level-card" + (level.unlocked ? "" : " locked"),
      levelCardLabel(level.level_id, level.completed),
    );
    if (level.unlocked) {
      card.addEventListener("click", () => onPick(level.level_id));
    } else {
      card.append(el("span", "mini-lock", " \u{1f512}"));
    }
    grid.append(card);
  }
  root.append(grid);
}
