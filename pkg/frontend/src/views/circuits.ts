/** Circuit-builder screen: the two-wire grid, the live color-coded matrix
 *  next to the target, and the fish bowl with the cat's outfit stage. */

import { cellBackground } from "../colors.js";
import { button, clear, el } from "../dom.js";
import { fishBowlLabel, outcomeLine } from "../viewmodel.js";
import type {
  CircuitsSessionView,
  ColorClassJson,
  GridColumnJson,
  MatrixJson,
} from "../types.js";

export interface CircuitsHandlers {
  onPlace: (gate: string, column: number, wire: number) => void;
  onRemove: (column: number, wire: number) => void;
  onReset: () => void;
  onBack: () => void;
}

const OUTFIT_STAGES = ["\u{1f3a9}\u{1f9e3}\u{1f457}", "\u{1f9e3}\u{1f457}", "\u{1f457}", ""];

function formatEntry([re, im]: [number, number]): string {
  const fmt = (v: number) => {
    const rounded = Math.round(v * 100) / 100;
    return Object.is(rounded, -0) ? "0" : String(rounded);
  };
  if (Math.abs(im) < 1e-9) {
    return fmt(re);
  }
  if (Math.abs(re) < 1e-9) {
    return `${fmt(im)}i`;
  }
  return `${fmt(re)}${im >= 0 ? "+" : ""}${fmt(im)}i`;
}

function renderMatrix(
  title: string,
  matrix: MatrixJson,
  colors: ColorClassJson[][],
): HTMLElement {
  const wrap = el("div", "matrix-wrap");
  wrap.append(el("div", "matrix-title", title));
  const table = el("div", "matrix");
  matrix.forEach((row, i) => {
    row.forEach((entry, j) => {
      const cell = el("div", "matrix-cell", formatEntry(entry));
      cell.style.background = cellBackground(colors[i][j]);
      table.append(cell);
    });
  });
  wrap.append(table);
  return wrap;
}

/** Tooltip text plus the gate's effect on the matrix (first variant). */
export function gateTooltip(view: CircuitsSessionView, gate: string): string {
  const text = view.tooltips[gate] ?? gate;
  const variants = view.tooltip_matrices?.[gate];
  if (!variants) {
    return text;
  }
  const first = Object.values(variants)[0];
  const rows = first
    .map((row) => row.map((entry) => formatEntry(entry)).join(" "))
    .join(" | ");
  return `${text}\nmatrix: [ ${rows} ]`;
}

function slotLabel(column: GridColumnJson, wire: number): string {
  if ("cnot" in column) {
    return column.cnot.control === wire ? "●" : "⊕";
  }
  return column.singles[wire] ?? "";
}

function slotOccupied(column: GridColumnJson, wire: number): boolean {
  if ("cnot" in column) {
    return true;
  }
  return column.singles[wire] !== null;
}

export function renderCircuits(
  root: HTMLElement,
  view: CircuitsSessionView,
  selectedGate: { value: string },
  handlers: CircuitsHandlers,
): void {
  clear(root);
  const header = el("header", "topbar");
  header.append(button("← levels", handlers.onBack, "btn back"));
  header.append(el("h1", "title", `Circuits level ${view.level_id}`));
  const bowl = el("div", "points-badge fish-bowl");
  bowl.append(el("span", "fish", "\u{1f41f}".repeat(view.fish_remaining) || "∅"));
  bowl.append(el("span", undefined, ` ${fishBowlLabel(view)} `));
  bowl.append(
    el("span", "outfit", `\u{1f431}${OUTFIT_STAGES[view.outfit_stage] ?? ""}`),
  );
  header.append(bowl);
  root.append(header);

  if (view.intro_popup) {
    root.append(el("div", "popup", view.intro_popup));
  }
  if (!view.penalty_enabled) {
    root.append(el("div", "hint", "sandbox level: removals are free here"));
  }

  const palette = el("div", "gate-row");
  for (const gate of view.allowed_gates) {
    const label = gate === "CNOT" ? "CNOT ●→⊕" : gate;
    const btn = button(
      label,
      () => {
        selectedGate.value = gate;
        renderCircuits(root, view, selectedGate, handlers);
      },
      "btn gate" + (selectedGate.value === gate ? " selected" : ""),
      gateTooltip(view, gate),
    );
    palette.append(btn);
  }
  palette.append(button("reset", handlers.onReset, "btn subtle"));
  root.append(palette);

  const grid = el("div", "circuit-grid");
  for (let wire = 0; wire < 2; wire++) {
    const row = el("div", "wire-row");
    row.append(el("div", "wire-label", `q${wire}`));
    view.grid.forEach((column, columnIndex) => {
      const occupied = slotOccupied(column, wire);
      const slot = button(
        slotLabel(column, wire),
        () => {
          if (occupied) {
            handlers.onRemove(columnIndex, wire);
          } else {
            handlers.onPlace(selectedGate.value, columnIndex, wire);
          }
        },
        "slot" + (occupied ? " occupied" : ""),
        occupied ? "click to remove" : `place ${selectedGate.value}`,
      );
      row.append(slot);
    });
    grid.append(row);
  }
  root.append(grid);

  const matrices = el("div", "matrix-pair");
  matrices.append(renderMatrix("your circuit", view.circuit_matrix, view.colored_matrix));
  matrices.append(
    renderMatrix("target circuit", view.target_matrix, view.target_colored_matrix),
  );
  root.append(matrices);

  const states = el("div", "state-line");
  states.append(
    el(
      "div",
      undefined,
      `output state: [${view.output_state.map(formatEntry).join(", ")}]  ·  ` +
        `target: [${view.target_state.map(formatEntry).join(", ")}]`,
    ),
  );
  root.append(states);

  if (view.hint) {
    root.append(el("div", "hint", `hint: ${view.hint}`));
  }
  const outcome = outcomeLine(view);
  if (outcome) {
    root.append(el("div", "outcome", outcome));
  }
}
