import type { BoundReport, SessionState } from "../src/types.js";

const degreeBound: BoundReport = {
  name: "degree-threshold-lower",
  kind: "lower",
  value: [0, 1],
  integer_view: 0,
  cite: "degree-threshold painter counting argument",
  assumptions: "",
};

const starBound: BoundReport = {
  name: "degree-threshold-lower",
  kind: "lower",
  value: [3, 2],
  integer_view: 2,
  cite: "degree-threshold painter counting argument",
  assumptions: "",
};

const base = {
  seed: null,
  bounds: [degreeBound],
};

/** Fresh painter session: engine proposed its first edge. */
export const freshSession: SessionState = {
  ...base,
  red: "path:2",
  blue: "clique:3",
  moves: [],
  winner: null,
  turns: 0,
  witness: null,
  pending: [1, 2],
  to_move: "human",
};

/** Two blue edges down, the triangle-closing edge pending. */
export const midGame: SessionState = {
  ...base,
  red: "path:2",
  blue: "clique:3",
  moves: [
    [1, 2, "b"],
    [1, 3, "b"],
  ],
  winner: null,
  turns: 2,
  witness: null,
  pending: [2, 3],
  to_move: "human",
};

/** Finished game: blue wins with a highlighted triangle. */
export const blueWin: SessionState = {
  ...base,
  red: "path:2",
  blue: "clique:3",
  moves: [
    [1, 2, "b"],
    [1, 3, "b"],
    [2, 3, "b"],
  ],
  winner: "b",
  turns: 3,
  witness: [1, 2, 3],
  pending: null,
  to_move: null,
};

/** Immediate red win on the first edge. */
export const redWin: SessionState = {
  ...base,
  red: "path:2",
  blue: "clique:3",
  moves: [[1, 2, "r"]],
  winner: "r",
  turns: 1,
  witness: [1, 2],
  pending: null,
  to_move: null,
};

/** Human-builder session on star targets: board of 7, human to propose. */
export const builderTurn: SessionState = {
  red: "star:3,3",
  blue: "star:3,3",
  seed: 11,
  moves: [
    [1, 4, "r"],
    [2, 4, "b"],
    [4, 7, "b"],
  ],
  winner: null,
  turns: 3,
  witness: null,
  pending: null,
  to_move: "human",
  bounds: [starBound],
};

export const fixtures: Record<string, SessionState> = {
  freshSession,
  midGame,
  blueWin,
  redWin,
  builderTurn,
};
