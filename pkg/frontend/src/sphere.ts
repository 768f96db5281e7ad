/** Canvas Bloch sphere: wireframe globe, axis labels, cat and mouse markers. */

import { projectSpherePoint } from "./viewmodel.js";

interface Point3 {
  x: number;
  y: number;
  z: number;
}

export function drawBlochSphere(
  canvas: HTMLCanvasElement,
  current: Point3,
  target: Point3,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    return;
  }
  const cx = canvas.width / 2;
  const cy = canvas.height / 2;
  const radius = Math.min(cx, cy) * 0.82;
  ctx.clearRect(0, 0, canvas.width, canvas.height);

  ctx.fillStyle = "rgba(150, 160, 235, 0.12)";
  ctx.beginPath();
  ctx.arc(cx, cy, radius, 0, 2 * Math.PI);
  ctx.fill();
  ctx.strokeStyle = "rgba(90, 90, 140, 0.65)";
  ctx.lineWidth = 1.5;
  ctx.stroke();

  drawCircle(ctx, radius, cx, cy, (t) => ({ x: Math.cos(t), y: Math.sin(t), z: 0 }));
  drawCircle(ctx, radius, cx, cy, (t) => ({ x: Math.cos(t), y: 0, z: Math.sin(t) }));
  drawCircle(ctx, radius, cx, cy, (t) => ({ x: 0, y: Math.cos(t), z: Math.sin(t) }));

  for (const [label, axis] of [
    ["|0⟩", { x: 0, y: 0, z: 1 }],
    ["|1⟩", { x: 0, y: 0, z: -1 }],
    ["x", { x: 1, y: 0, z: 0 }],
    ["y", { x: 0, y: 1, z: 0 }],
  ] as const) {
    const p = projectSpherePoint(axis, radius * 1.12, cx, cy);
    ctx.fillStyle = "#555";
    ctx.font = "13px sans-serif";
    ctx.fillText(label, p.x - 8, p.y + 4);
  }

  drawMarker(ctx, radius, cx, cy, target, "#8a8f98", "\u{1f401}"); // mouse
  drawMarker(ctx, radius, cx, cy, current, "#e8833a", "\u{1f431}"); // cat
}

function drawCircle(
  ctx: CanvasRenderingContext2D,
  radius: number,
  cx: number,
  cy: number,
  param: (t: number) => Point3,
): void {
  ctx.strokeStyle = "rgba(110, 110, 160, 0.35)";
  ctx.lineWidth = 1;
  ctx.beginPath();
  for (let i = 0; i <= 72; i++) {
    const p = projectSpherePoint(param((i / 72) * 2 * Math.PI), radius, cx, cy);
    if (i === 0) {
      ctx.moveTo(p.x, p.y);
    } else {
      ctx.lineTo(p.x, p.y);
    }
  }
  ctx.stroke();
}

function drawMarker(
  ctx: CanvasRenderingContext2D,
  radius: number,
  cx: number,
  cy: number,
  point: Point3,
  color: string,
  emoji: string,
): void {
  const p = projectSpherePoint(point, radius, cx, cy);
  ctx.globalAlpha = p.behind ? 0.45 : 1.0;
  ctx.strokeStyle = color;
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(cx, cy);
  ctx.lineTo(p.x, p.y);
  ctx.stroke();
  ctx.font = "22px serif";
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  ctx.fillText(emoji, p.x, p.y);
  ctx.globalAlpha = 1.0;
  ctx.textAlign = "start";
  ctx.textBaseline = "alphabetic";
}
