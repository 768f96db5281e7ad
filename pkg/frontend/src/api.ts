/** Thin typed wrapper over the game service's HTTP API. */

import type {
  BlochSessionView,
  CircuitsSessionView,
  EntanglementSessionView,
  GameId,
  GameSummary,
  LevelSummary,
  ProfileView,
  QuizListEntry,
  QuizResultView,
  QuizView,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

type SessionView = BlochSessionView | EntanglementSessionView | CircuitsSessionView;

const TOKEN_KEY = "qubitcat-token";

export class Api {
  private token: string | null;

  constructor(private base: string = "") {
    this.token = localStorage.getItem(TOKEN_KEY);
  }

  get hasProfile(): boolean {
    return this.token !== null;
  }

  forgetProfile(): void {
    this.token = null;
    localStorage.removeItem(TOKEN_KEY);
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = { "Content-Type": "application/json" };
    if (this.token) {
      headers["Authorization"] = `Bearer ${this.token}`;
    }
    const response = await fetch(this.base + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json().catch(() => ({}));
    if (!response.ok) {
      throw new ApiError(response.status, payload.detail ?? response.statusText);
    }
    return payload as T;
  }

  async createProfile(nickname: string): Promise<void> {
    const created = await this.request<{ token: string }>("POST", "/api/profiles", {
      nickname,
    });
    this.token = created.token;
    localStorage.setItem(TOKEN_KEY, created.token);
  }

  profile(): Promise<ProfileView> {
    return this.request("GET", "/api/profile");
  }

  games(): Promise<GameSummary[]> {
    return this.request("GET", "/api/games");
  }

  levels(gameId: GameId): Promise<LevelSummary[]> {
    return this.request("GET", `/api/games/${gameId}/levels`);
  }

  openSession(gameId: GameId, levelId: number): Promise<SessionView> {
    return this.request("POST", `/api/games/${gameId}/levels/${levelId}/session`);
  }

  move(gameId: GameId, levelId: number, move: unknown): Promise<SessionView> {
    return this.request("POST", `/api/games/${gameId}/levels/${levelId}/session/moves`, {
      move,
    });
  }

  quizzes(): Promise<QuizListEntry[]> {
    return this.request("GET", "/api/quizzes");
  }

  quiz(quizId: string): Promise<QuizView> {
    return this.request("GET", `/api/quizzes/${quizId}`);
  }

  submitQuiz(quizId: string, answers: (number | "idk")[]): Promise<QuizResultView> {
    return this.request("POST", `/api/quizzes/${quizId}/submit`, { answers });
  }
}
