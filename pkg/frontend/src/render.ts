/** Deterministic render of a protocol state to an HTML string.
 *
 *  The board is a vertex line with edges as arcs above it; arc height is
 *  proportional to rank distance. The pending edge is dashed, witness
 *  edges are thickened. No client-side game logic lives here.
 */

import { parseSpec } from "./spec.js";
import type { Color, SessionState } from "./types.js";

const STEP = 48;
const MARGIN = 30;
const BASELINE = 120;

const STROKE: Record<Color, string> = { r: "#c0392b", b: "#2457a8" };

function vx(rank: number): number {
  return MARGIN + (rank - 1) * STEP;
}

function arcPath(u: number, v: number): string {
  const x1 = vx(u);
  const x2 = vx(v);
  const height = 14 + (v - u) * 16;
  return `M ${x1} ${BASELINE} A ${(x2 - x1) / 2} ${height} 0 0 1 ${x2} ${BASELINE}`;
}

interface ArcStyle {
  color: string;
  width: number;
  dashed?: boolean;
  cls: string;
}

function arc(u: number, v: number, style: ArcStyle): string {
  const dash = style.dashed ? ` stroke-dasharray="6 4"` : "";
  return (
    `<path class="${style.cls}" d="${arcPath(u, v)}" fill="none"` +
    ` stroke="${style.color}" stroke-width="${style.width}"${dash}/>`
  );
}

function witnessEdges(state: SessionState): Set<string> {
  // edges of the winning color joining two witness vertices, thickened
  if (!state.winner || !state.witness) return new Set();
  const members = new Set(state.witness);
  const out = new Set<string>();
  for (const [u, v, c] of state.moves) {
    if (c === state.winner && members.has(u) && members.has(v)) {
      out.add(`${u}-${v}`);
    }
  }
  return out;
}

export function renderBoard(state: SessionState): string {
  const ranks = new Set<number>();
  for (const [u, v] of state.moves) {
    ranks.add(u);
    ranks.add(v);
  }
  if (state.pending) {
    ranks.add(state.pending[0]);
    ranks.add(state.pending[1]);
  }
  for (const r of state.witness ?? []) ranks.add(r);
  const n = Math.max(0, ...ranks);
  const width = MARGIN * 2 + Math.max(0, n - 1) * STEP;

  const thick = witnessEdges(state);
  const parts: string[] = [];
  parts.push(
    `<svg class="board" viewBox="0 0 ${width} ${BASELINE + 40}" width="${width}">`
  );
  parts.push(
    `<line x1="${MARGIN}" y1="${BASELINE}" x2="${width - MARGIN}"` +
      ` y2="${BASELINE}" stroke="#999" stroke-width="1"/>`
  );
  for (const [u, v, c] of state.moves) {
    const isWitness = thick.has(`${u}-${v}`);
    parts.push(
      arc(u, v, {
        color: STROKE[c],
        width: isWitness ? 5 : 2,
        cls: isWitness ? `edge witness ${c}` : `edge ${c}`,
      })
    );
  }
  if (state.pending) {
    parts.push(
      arc(state.pending[0], state.pending[1], {
        color: "#666",
        width: 2,
        dashed: true,
        cls: "edge pending",
      })
    );
  }
  for (let rank = 1; rank <= n; rank++) {
    const highlighted = state.witness?.includes(rank) && state.winner;
    const fill = highlighted ? STROKE[state.winner as Color] : "#333";
    parts.push(
      `<circle class="vertex" cx="${vx(rank)}" cy="${BASELINE}" r="6" fill="${fill}"/>`
    );
    parts.push(
      `<text x="${vx(rank)}" y="${BASELINE + 22}" text-anchor="middle"` +
        ` font-size="12">${rank}</text>`
    );
  }
  parts.push(`</svg>`);
  return parts.join("\n");
}

export function renderThumbnail(spec: string, color: Color): string {
  const g = parseSpec(spec);
  const width = MARGIN * 2 + Math.max(0, g.n - 1) * STEP;
  const parts: string[] = [];
  parts.push(
    `<svg class="thumbnail ${color}" viewBox="0 0 ${width} ${BASELINE + 40}"` +
      ` width="${Math.round(width / 2)}">`
  );
  for (const [u, v] of g.edges) {
    parts.push(arc(u, v, { color: STROKE[color], width: 2, cls: "edge" }));
  }
  for (let rank = 1; rank <= g.n; rank++) {
    parts.push(
      `<circle cx="${vx(rank)}" cy="${BASELINE}" r="5" fill="#333"/>`
    );
  }
  parts.push(`</svg>`);
  return `<figure><figcaption>${spec}</figcaption>${parts.join("\n")}</figure>`;
}

function renderStatus(state: SessionState): string {
  if (state.winner) {
    const side = state.winner === "r" ? "red" : "blue";
    return `<p class="status won">${side} wins in ${state.turns} turns;` +
      ` witness [${(state.witness ?? []).join(", ")}]</p>`;
  }
  const who = state.to_move === "human" ? "your move" : "engine thinking";
  return `<p class="status">turn ${state.turns}; ${who}</p>`;
}

function renderBounds(state: SessionState): string {
  if (!state.bounds.length) return "";
  const items = state.bounds
    .map(
      (b) =>
        `<li class="${b.kind}">${b.name}: turns ` +
        `${b.kind === "lower" ? "≥" : b.kind === "upper" ? "≤" : "ref"} ` +
        `${b.integer_view}</li>`
    )
    .join("\n");
  return `<ul class="bounds">\n${items}\n</ul>`;
}

/** Painter controls. Buttons carry disabled unless it is the human's turn,
 *  which is the DOM half of input gating (the controller enforces the other
 *  half and refuses to send out of turn). */
export function renderControls(state: SessionState): string {
  const enabled = state.to_move === "human" && state.pending !== null;
  const dis = enabled ? "" : " disabled";
  return (
    `<div class="controls">` +
    `<button class="paint-red" data-color="r"${dis}>Red</button>` +
    `<button class="paint-blue" data-color="b"${dis}>Blue</button>` +
    `</div>`
  );
}

export function render(state: SessionState): string {
  return [
    `<div class="game">`,
    `<header>`,
    renderThumbnail(state.red, "r"),
    renderThumbnail(state.blue, "b"),
    `</header>`,
    renderStatus(state),
    renderBoard(state),
    renderControls(state),
    renderBounds(state),
    `</div>`,
  ].join("\n");
}
