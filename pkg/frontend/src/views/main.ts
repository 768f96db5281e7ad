/** Home screen: the cat tree, one cat per mini-game plus the quiz cat,
 *  with the points + nickname display in the upper-right corner. */

import { button, clear, el } from "../dom.js";
import { mainPageModel } from "../viewmodel.js";
import type { GameId, GameSummary, ProfileView } from "../types.js";

const CAT_EMOJI: Record<GameId, string> = {
  bloch: "\u{1f431}",
  entanglement: "\u{1f408}",
  circuits: "\u{1f63c}",
};

export function renderMainPage(
  root: HTMLElement,
  profile: ProfileView,
  games: GameSummary[],
  onOpenGame: (gameId: GameId) => void,
  onOpenQuizzes: () => void,
): void {
  clear(root);
  const model = mainPageModel(profile, games);

  const header = el("header", "topbar");
  header.append(el("h1", "title", "Quantum Cat Tree"));
  header.append(el("div", "points-badge", model.pointsLabel));
  root.append(header);

  const tree = el("div", "cat-tree");
  for (const cat of model.cats) {
    const perch = el("div", "perch" + (cat.locked ? " locked" : ""));
    const face = el("div", "cat-face", CAT_EMOJI[cat.gameId]);
    if (cat.jester) {
      face.append(el("span", "jester-hat", "\u{1f939}"));
      face.title = "Jester outfit unlocked!";
    }
    perch.append(face);
    perch.append(el("div", "perch-title", cat.title));
    perch.append(
      el("div", "perch-progress", `${cat.completed}/${cat.total} levels`),
    );
    if (cat.locked) {
      perch.append(el("div", "lock-badge", "\u{1f512} finish 6 Bloch levels"));
    } else {
      perch.append(button("Play", () => onOpenGame(cat.gameId)));
    }
    tree.append(perch);
  }

  const quizPerch = el("div", "perch quiz-perch");
  quizPerch.append(el("div", "cat-face", "\u{1f9d0}"));
  quizPerch.append(el("div", "perch-title", "Quiz Cat"));
  quizPerch.append(el("div", "perch-progress", "test your knowledge"));
  quizPerch.append(button("Quizzes", onOpenQuizzes));
  tree.append(quizPerch);

  root.append(tree);
}
