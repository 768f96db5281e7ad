/** Quiz screens: the list with attempt counts and high scores, and the
 *  question form. Assessment forms pre-select "I don't know" everywhere
 *  and show no correct answers; in-game quizzes reveal them after grading. */

import { button, clear, el } from "../dom.js";
import type { QuizListEntry, QuizResultView, QuizView } from "../types.js";

export function renderQuizList(
  root: HTMLElement,
  quizzes: QuizListEntry[],
  onPick: (quizId: string) => void,
  onBack: () => void,
): void {
  clear(root);
  const header = el("header", "topbar");
  header.append(button("← cat tree", onBack, "btn back"));
  header.append(el("h1", "title", "Quizzes"));
  root.append(header);

  const list = el("div", "quiz-list");
  for (const quiz of quizzes) {
    const card = el("div", "level-card");
    card.append(el("div", "perch-title", quiz.id));
    card.append(
      el(
        "div",
        "perch-progress",
        quiz.attempts > 0
          ? `high score ${quiz.high_score}/10 · ${quiz.attempts} attempt(s)`
          : "not attempted yet",
      ),
    );
    card.append(button("Take quiz", () => onPick(quiz.id)));
    list.append(card);
  }
  root.append(list);
}

const IDK_LABEL = "I don't know";

export function renderQuizForm(
  root: HTMLElement,
  quiz: QuizView,
  result: QuizResultView | null,
  onSubmit: (answers: (number | "idk")[]) => void,
  onBack: () => void,
): void {
  clear(root);
  const header = el("header", "topbar");
  header.append(button("← quizzes", onBack, "btn back"));
  header.append(el("h1", "title", `Quiz: ${quiz.id}`));
  if (result) {
    header.append(
      el("div", "points-badge", `score ${result.score}/${result.out_of}`),
    );
  }
  root.append(header);

  const form = el("div", "quiz-form");
  quiz.questions.forEach((question, qi) => {
    const block = el("div", "question");
    block.append(el("div", "prompt", `${qi + 1}. ${question.prompt}`));
    const options = [...question.options];
    if (question.allow_idk) {
      options.push(IDK_LABEL);
    }
    options.forEach((option, oi) => {
      const isIdk = question.allow_idk && oi === question.options.length;
      const label = el("label", "option");
      const input = el("input") as HTMLInputElement;
      input.type = "radio";
      input.name = `q${qi}`;
      input.value = isIdk ? "idk" : String(oi);
      if (isIdk) {
        input.checked = true; // "I don't know" is pre-selected by default
      }
      label.append(input, document.createTextNode(" " + option));
      if (result && !isIdk) {
        const verdict = result.per_question[qi];
        if (verdict.reveal === oi) {
          label.classList.add("correct-answer");
        }
      }
      block.append(label);
    });
    if (result) {
      block.append(
        el(
          "div",
          result.per_question[qi].correct ? "verdict right" : "verdict wrong",
          result.per_question[qi].correct ? "correct" : "incorrect",
        ),
      );
    }
    form.append(block);
  });

  form.append(
    button("Submit answers", () => {
      const answers: (number | "idk")[] = quiz.questions.map((_, qi) => {
        const checked = form.querySelector<HTMLInputElement>(
          `input[name="q${qi}"]:checked`,
        );
        if (!checked) {
          return quiz.questions[qi].allow_idk ? "idk" : 0;
        }
        return checked.value === "idk" ? "idk" : Number(checked.value);
      });
      onSubmit(answers);
    }),
  );
  root.append(form);
}
