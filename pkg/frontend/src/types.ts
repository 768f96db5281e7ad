/** Mirrors of the game-service payloads. The client renders these verbatim:
 *  every score, unlock, meter and color below is computed server-side. */

export type GameId = "bloch" | "entanglement" | "circuits";

export type ColorName = "pink" | "yellow" | "blue" | "orange" | "zero";

export interface ColorClassJson {
  primary: ColorName;
  secondary?: ColorName;
}

export type ComplexJson = [number, number];
export type StateJson = ComplexJson[];
export type MatrixJson = ComplexJson[][];

export interface ProfileView {
  profile_id: string;
  nickname: string;
  total_points: number;
  completed: Record<GameId, number[]>;
  jester_outfits: string[];
  circuits_unlocked: boolean;
  quiz_records: Record<string, { attempts: number; high_score: number }>;
}

export interface GameSummary {
  game_id: GameId;
  unlocked: boolean;
  levels_completed: number;
  total: number;
}

export interface LevelSummary {
  level_id: number;
  unlocked: boolean;
  completed: boolean;
}

export interface SessionCommon {
  session_id: string;
  game_id: GameId;
  level_id: number;
  status: "InProgress" | "Won" | "Failed" | "Exhausted";
  score?: number;
  awarded_points?: number;
  intro_popup?: string | null;
}

export interface BlochSessionView extends SessionCommon {
  moves: string[];
  move_count: number;
  current_state: StateJson;
  current_bloch: { x: number; y: number; z: number };
  target_state: StateJson;
  target_bloch: { x: number; y: number; z: number };
  allowed_gates: string[];
  min_solution_length: number;
  hint?: string | null;
  tooltips: Record<string, string>;
}

export interface ObstacleJson {
  required_action: string;
  label: string;
}

export interface EntanglementSessionView extends SessionCommon {
  position: number;
  course_length: number;
  synced_count: number;
  wrong_count: number;
  decoherence: number;
  decoherence_enabled: boolean;
  wrong_move_limit: number;
  mode: "Correlated" | "AntiCorrelated";
  course_a: ObstacleJson[];
  course_b: ObstacleJson[];
}

export type GridColumnJson =
  | { cnot: { control: number; target: number } }
  | { singles: (string | null)[] };

export interface CircuitsSessionView extends SessionCommon {
  grid: GridColumnJson[];
  circuit_matrix: MatrixJson;
  output_state: StateJson;
  colored_matrix: ColorClassJson[][];
  input_state: StateJson;
  target_matrix: MatrixJson;
  target_state: StateJson;
  target_colored_matrix: ColorClassJson[][];
  fish_remaining: number;
  points_remaining: number;
  outfit_stage: number;
  penalty_enabled: boolean;
  allowed_gates: string[];
  max_columns: number;
  hint?: string | null;
  tooltips: Record<string, string>;
  tooltip_matrices: Record<string, Record<string, MatrixJson>>;
}

export interface QuizQuestionView {
  id: string;
  prompt: string;
  options: string[];
  allow_idk: boolean;
}

export interface QuizView {
  id: string;
  kind: "InGame" | "Assessment";
  questions: QuizQuestionView[];
}

export interface QuizListEntry {
  id: string;
  kind: "InGame" | "Assessment";
  questions: number;
  attempts: number;
  high_score: number;
}

export interface QuizResultView {
  quiz_id: string;
  score: number;
  out_of: number;
  per_question: { correct: boolean; reveal?: number }[];
  attempts: number;
  high_score: number;
}
