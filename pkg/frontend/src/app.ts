/** App controller: fetch state from the service, hand it to the views.
 *  All transitions round-trip through the API; nothing is decided locally. */

import { Api, ApiError } from "./api.js";
import { clear, el, button } from "./dom.js";
import { renderMainPage } from "./views/main.js";
import { renderLevelSelect } from "./views/levels.js";
import { renderBloch } from "./views/bloch.js";
import { renderEntanglement } from "./views/entanglement.js";
import { renderCircuits } from "./views/circuits.js";
import { renderQuizForm, renderQuizList } from "./views/quiz.js";
import type {
  BlochSessionView,
  CircuitsSessionView,
  EntanglementSessionView,
  GameId,
  QuizResultView,
  QuizView,
} from "./types.js";

const api = new Api();
const root = document.getElementById("app") as HTMLElement;

function showError(error: unknown): void {
  const message = error instanceof ApiError ? error.message : String(error);
  const banner = el("div", "error-banner", message);
  root.prepend(banner);
  setTimeout(() => banner.remove(), 4000);
}

async function showWelcome(): Promise<void> {
  clear(root);
  const box = el("div", "welcome");
  box.append(el("h1", "title", "Quantum Cat Games"));
  box.append(
    el(
      "p",
      undefined,
      "Three mini-games about qubits: steer a cat around the Bloch sphere, " +
        "run entangled cats through agility courses, and build two-qubit circuits.",
    ),
  );
  const input = el("input") as HTMLInputElement;
  input.placeholder = "pick a nickname";
  input.maxLength = 20;
  box.append(input);
  box.append(
    button("Start playing", async () => {
      try {
        await api.createProfile(input.value);
        await showMain();
      } catch (error) {
        showError(error);
      }
    }),
  );
  root.append(box);
}

async function showMain(): Promise<void> {
  try {
    const [profile, games] = await Promise.all([api.profile(), api.games()]);
    renderMainPage(root, profile, games, showLevels, showQuizzes);
  } catch (error) {
    if (error instanceof ApiError && error.status === 401) {
      api.forgetProfile();
      await showWelcome();
      return;
    }
    showError(error);
  }
}

async function showLevels(gameId: GameId): Promise<void> {
  const levels = await api.levels(gameId);
  renderLevelSelect(
    root,
    gameId,
    levels,
    (levelId) => startSession(gameId, levelId),
    showMain,
  );
}

async function startSession(gameId: GameId, levelId: number): Promise<void> {
  try {
    const view = await api.openSession(gameId, levelId);
    renderSession(gameId, levelId, view);
  } catch (error) {
    showError(error);
  }
}

function renderSession(gameId: GameId, levelId: number, view: unknown): void {
  const back = () => showLevels(gameId);
  const reset = () => startSession(gameId, levelId);
  const sendMove = async (move: unknown) => {
    try {
      const updated = await api.move(gameId, levelId, move);
      renderSession(gameId, levelId, updated);
    } catch (error) {
      showError(error);
    }
  };

  if (gameId === "bloch") {
    renderBloch(root, view as BlochSessionView, {
      onGate: (gate) => sendMove({ gate }),
      onReset: reset,
      onBack: back,
    });
  } else if (gameId === "entanglement") {
    renderEntanglement(root, view as EntanglementSessionView, {
      onAction: (action) => sendMove({ action }),
      onReset: reset,
      onBack: back,
    });
  } else {
    const selected = { value: (view as CircuitsSessionView).allowed_gates[0] };
    renderCircuits(root, view as CircuitsSessionView, selected, {
      onPlace: (gate, column, wire) => {
        if (gate === "CNOT") {
          // the clicked wire is the control; the other wire is the target
          sendMove({ op: "place", gate, column, control: wire, target: 1 - wire });
        } else {
          sendMove({ op: "place", gate, column, wire });
        }
      },
      onRemove: (column, wire) => sendMove({ op: "remove", column, wire }),
      onReset: reset,
      onBack: back,
    });
  }
}

async function showQuizzes(): Promise<void> {
  const quizzes = await api.quizzes();
  renderQuizList(root, quizzes, showQuiz, showMain);
}

async function showQuiz(quizId: string, result: QuizResultView | null = null): Promise<void> {
  const quiz: QuizView = await api.quiz(quizId);
  renderQuizForm(
    root,
    quiz,
    result,
    async (answers) => {
      try {
        const graded = await api.submitQuiz(quizId, answers);
        await showQuiz(quizId, graded);
      } catch (error) {
        showError(error);
      }
    },
    showQuizzes,
  );
}

if (api.hasProfile) {
  void showMain();
} else {
  void showWelcome();
}
