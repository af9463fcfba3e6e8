/** Wire types for the session protocol. The server is the source of truth;
 *  the client renders states verbatim and only validates its own inputs. */

export type Color = "r" | "b";

export type Move = [number, number, Color];

export interface BoundReport {
  name: string;
  kind: "lower" | "upper" | "reference";
  value: [number, number]; // exact rational as numerator/denominator
  integer_view: number;
  cite: string;
  assumptions: string;
}

export interface SessionState {
  red: string;
  blue: string;
  seed: number | null;
  moves: Move[];
  winner: Color | null;
  turns: number;
  witness: number[] | null;
  pending: [number, number] | null;
  to_move: "human" | "engine" | null;
  bounds: BoundReport[];
}

export interface CreateSessionResponse {
  id: string;
  state: SessionState;
}

export type PainterMove = { color: Color };
export type BuilderMove = {
  u_rank: number;
  v_rank: number;
  place?: "right" | "between";
};
