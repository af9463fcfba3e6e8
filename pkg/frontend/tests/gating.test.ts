import { describe, expect, it } from "vitest";

import {
  FetchLike,
  GatingError,
  SessionController,
} from "../src/controller.js";
import { blueWin, freshSession, midGame } from "./fixtures.js";
import type { SessionState } from "../src/types.js";

/** Fetch stub that records every request it is asked to perform. */
function recordingFetch(responses: unknown[]): {
  fetch: FetchLike;
  calls: Array<{ url: string; body?: string }>;
} {
  const calls: Array<{ url: string; body?: string }> = [];
  const queue = [...responses];
  const fetch: FetchLike = async (url, init) => {
    calls.push({ url, body: init?.body });
    const next = queue.shift();
    return { ok: true, status: 200, json: async () => next };
  };
  return { fetch, calls };
}

async function controllerAt(state: SessionState) {
  const { fetch, calls } = recordingFetch([{ id: "s1", state }]);
  const ctl = new SessionController("http://test", fetch);
  await ctl.create({
    red: state.red,
    blue: state.blue,
    human_role: "painter",
    engine: "builder:clique",
  });
  calls.length = 0; // only count what happens after setup
  return { ctl, calls };
}

describe("input gating", () => {
  it("allows a move when the human is to act", async () => {
    const { ctl } = await controllerAt(freshSession);
    expect(ctl.canAct()).toBe(true);
  });

  it("refuses to send when it is the engine's turn", async () => {
    const { ctl, calls } = await controllerAt({
      ...freshSession,
      to_move: "engine",
      pending: null,
    });
    expect(ctl.canAct()).toBe(false);
    await expect(ctl.sendColor("b")).rejects.toBeInstanceOf(GatingError);
    expect(calls).toHaveLength(0); // the request was never constructed
  });

  it("refuses to send after the game is over", async () => {
    const { ctl, calls } = await controllerAt(blueWin);
    await expect(ctl.sendColor("r")).rejects.toBeInstanceOf(GatingError);
    expect(calls).toHaveLength(0);
  });

  it("refuses to send before a session exists", async () => {
    const { fetch, calls } = recordingFetch([]);
    const ctl = new SessionController("http://test", fetch);
    await expect(ctl.sendColor("b")).rejects.toBeInstanceOf(GatingError);
    expect(calls).toHaveLength(0);
  });

  it("blocks a second move while one is in flight", async () => {
    let release: (value: unknown) => void = () => {};
    const gate = new Promise((resolve) => (release = resolve));
    const calls: string[] = [];
    const fetch: FetchLike = async (url) => {
      calls.push(url);
      if (url.endsWith("/move")) await gate;
      return {
        ok: true,
        status: 200,
        json: async () =>
          url.endsWith("/sessions")
            ? { id: "s1", state: freshSession }
            : midGame,
      };
    };
    const ctl = new SessionController("http://test", fetch);
    await ctl.create({
      red: "path:2",
      blue: "clique:3",
      human_role: "painter",
      engine: "builder:clique",
    });
    const first = ctl.sendColor("b");
    await expect(ctl.sendColor("b")).rejects.toBeInstanceOf(GatingError);
    release(undefined);
    await first;
    expect(calls.filter((u) => u.endsWith("/move"))).toHaveLength(1);
  });

  it("updates canAct from each new state", async () => {
    const { fetch } = recordingFetch([
      { id: "s1", state: freshSession },
      midGame,
      blueWin,
    ]);
    const ctl = new SessionController("http://test", fetch);
    await ctl.create({
      red: "path:2",
      blue: "clique:3",
      human_role: "painter",
      engine: "builder:clique",
    });
    await ctl.sendColor("b");
    expect(ctl.canAct()).toBe(true); // midGame: still the human's turn
    await ctl.sendColor("b");
    expect(ctl.canAct()).toBe(false); // game over
  });
});
