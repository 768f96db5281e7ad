import type { ColorClassJson, ColorName } from "./types.js";

/** Palette for matrix entries: pink/yellow for +/- real, blue/orange for
 *  +/- imaginary, muted grey for zero. Mixed entries blend two of these. */
export const COLOR_CSS: Record<ColorName, string> = {
  pink: "#f7a8cb",
  yellow: "#f3d97c",
  blue: "#8fbcf8",
  orange: "#f5ad6b",
  zero: "#ece9f1",
};

/** CSS background for one matrix cell; gradients render mixed entries. */
export function cellBackground(color: ColorClassJson): string {
  const primary = COLOR_CSS[color.primary];
  if (!color.secondary) {
    return primary;
  }
  return `linear-gradient(135deg, ${primary} 0%, ${COLOR_CSS[color.secondary]} 100%)`;
}
