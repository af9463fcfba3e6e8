/** Session controller: owns the protocol conversation for one game.
 *
 *  Input gating is enforced here, not just in the DOM: a move request is
 *  constructed only when the last known state says it is the human's turn
 *  and no request is in flight, so out-of-turn input can never reach the
 *  network layer.
 */

import type {
  BuilderMove,
  Color,
  CreateSessionResponse,
  PainterMove,
  SessionState,
} from "./types.js";

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string }
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export class ProtocolError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class GatingError extends Error {}

export interface CreateOptions {
  red: string;
  blue: string;
  human_role: "builder" | "painter";
  engine: string;
  params?: Record<string, unknown> | null;
  seed?: number | null;
}

export class SessionController {
  private sessionId: string | null = null;
  private state: SessionState | null = null;
  private inFlight = false;

  constructor(private baseUrl: string, private fetchImpl: FetchLike) {}

  get current(): SessionState | null {
    return this.state;
  }

  /** True exactly when a human move may be sent right now. */
  canAct(): boolean {
    return (
      this.state !== null &&
      this.state.winner === null &&
      this.state.to_move === "human" &&
      !this.inFlight
    );
  }

  async create(options: CreateOptions): Promise<SessionState> {
    const doc = (await this.request("/sessions", {
      params: options.params ?? null,
      seed: options.seed ?? null,
      ...options,
    })) as CreateSessionResponse;
    this.sessionId = doc.id;
    this.state = doc.state;
    return doc.state;
  }

  async refetch(): Promise<SessionState> {
    if (this.sessionId === null) throw new GatingError("no session yet");
    this.state = (await this.request(
      `/sessions/${this.sessionId}`
    )) as SessionState;
    return this.state;
  }

  async sendColor(color: Color): Promise<SessionState> {
    const move: PainterMove = { color };
    return this.sendMove(move);
  }

  async sendEdge(move: BuilderMove): Promise<SessionState> {
    return this.sendMove(move);
  }

  private async sendMove(move: PainterMove | BuilderMove): Promise<SessionState> {
    if (this.sessionId === null) throw new GatingError("no session yet");
    if (!this.canAct()) {
      throw new GatingError("not the human's turn");
    }
    this.inFlight = true;
    try {
      this.state = (await this.request(
        `/sessions/${this.sessionId}/move`,
        move
      )) as SessionState;
      return this.state;
    } catch (err) {
      if (err instanceof ProtocolError) {
        // desync: the server refused; refetch the authoritative state
        this.inFlight = false;
        await this.refetch();
      }
      throw err;
    } finally {
      this.inFlight = false;
    }
  }

  private async request(path: string, body?: unknown): Promise<unknown> {
    const resp = await this.fetchImpl(this.baseUrl + path, {
      method: body === undefined ? "GET" : "POST",
      headers: body === undefined ? undefined : {
        "content-type": "application/json",
      },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!resp.ok) {
      throw new ProtocolError(resp.status, `server rejected ${path}`);
    }
    return resp.json();
  }
}
