/** Pure view models: reshape server payloads for rendering.
 *
 *  Nothing in this module computes game outcomes. Scores, unlocks, meters
 *  and colors arrive from the API and are surfaced verbatim; these helpers
 *  only pick fields, format labels, and project coordinates for drawing.
 */

import type {
  GameId,
  GameSummary,
  ProfileView,
  SessionCommon,
} from "./types.js";

export interface CatModel {
  gameId: GameId;
  title: string;
  locked: boolean;
  jester: boolean;
  completed: number;
  total: number;
}

const GAME_TITLES: Record<GameId, string> = {
  bloch: "Bloch Sphere",
  entanglement: "Entangled Cats",
  circuits: "Quantum Circuits",
};

export function mainPageModel(
  profile: ProfileView,
  games: GameSummary[],
): { cats: CatModel[]; pointsLabel: string } {
  return {
    cats: games.map((game) => ({
      gameId: game.game_id,
      title: GAME_TITLES[game.game_id],
      locked: !game.unlocked,
      jester: profile.jester_outfits.includes(game.game_id),
      completed: game.levels_completed,
      total: game.total,
    })),
    pointsLabel: pointsLabel(profile),
  };
}

/** Upper-right corner display: the server's running total plus nickname. */
export function pointsLabel(profile: ProfileView): string {
  return `${profile.total_points} pts · ${profile.nickname}`;
}

/** Banner text for a finished session, straight from server fields. */
export function outcomeLine(view: SessionCommon): string | null {
  switch (view.status) {
    case "Won":
      return view.awarded_points !== undefined
        ? `Won! Score ${view.score}, +${view.awarded_points} points`
        : `Won! Score ${view.score}`;
    case "Failed":
      return "Decohered! The run failed - try the level again.";
    case "Exhausted":
      return "The fish bowl is empty and the cat is sad and starving. Retry the level?";
    default:
      return null;
  }
}

/** Decoherence meter fill, already 0-100 server-side. */
export function meterPercent(view: { decoherence: number }): number {
  return Math.max(0, Math.min(100, view.decoherence));
}

export interface SpherePoint2D {
  x: number;
  y: number;
  behind: boolean;
}

/** Orthographic projection of a Bloch point onto the canvas, with a gentle
 *  tilt so all three axes stay visible. +z is up, +x toward the viewer. */
export function projectSpherePoint(
  point: { x: number; y: number; z: number },
  radius: number,
  cx: number,
  cy: number,
): SpherePoint2D {
  const tilt = Math.PI / 9;
  const yaw = Math.PI / 7;
  const x1 = point.x * Math.cos(yaw) + point.y * Math.sin(yaw);
  const depth = -point.x * Math.sin(yaw) + point.y * Math.cos(yaw);
  const y1 = point.z * Math.cos(tilt) - depth * Math.sin(tilt);
  const z1 = point.z * Math.sin(tilt) + depth * Math.cos(tilt);
  return {
    x: cx + radius * x1,
    y: cy - radius * y1,
    behind: z1 < 0,
  };
}

/** Progress caption for a level-select card. */
export function levelCardLabel(levelId: number, completed: boolean): string {
  return completed ? `Level ${levelId} ✓` : `Level ${levelId}`;
}

export function fishBowlLabel(view: {
  fish_remaining: number;
  points_remaining: number;
}): string {
  return `${view.fish_remaining} fish · ${view.points_remaining} points`;
}
