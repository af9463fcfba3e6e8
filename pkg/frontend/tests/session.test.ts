/** Full human-painter session against the real engine over HTTP. */

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { SessionController } from "../src/controller.js";
import { render } from "../src/render.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(timeoutMs = 20000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${BASE}/sessions/probe`);
      if (resp.status === 404) return; // responding; unknown id is expected
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  throw new Error("session server did not come up");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-c",
     `from ordered_ramsey.cli import main; main(["serve", "--port", "${PORT}"])`],
    { stdio: "ignore" }
  );
  await waitForServer();
}, 30000);

afterAll(() => {
  server?.kill();
});

describe("live session against builder:clique on (path:2, clique:3)", () => {
  it("completes in 3 blue clicks with the blue triangle highlighted", async () => {
    const ctl = new SessionController(BASE, fetch as never);
    let state = await ctl.create({
      red: "path:2",
      blue: "clique:3",
      human_role: "painter",
      engine: "builder:clique",
    });
    expect(state.pending).toEqual([1, 2]);
    expect(state.to_move).toBe("human");

    let clicks = 0;
    while (state.winner === null) {
      expect(ctl.canAct()).toBe(true);
      state = await ctl.sendColor("b");
      clicks += 1;
    }

    expect(clicks).toBe(3);
    expect(state.winner).toBe("b");
    expect(state.witness?.slice().sort()).toEqual([1, 2, 3]);

    const html = render(state);
    expect(html.match(/class="edge witness b"/g)).toHaveLength(3);
    expect(html).toContain("blue wins in 3 turns");

    // the game is over: further input is unsendable
    expect(ctl.canAct()).toBe(false);
  }, 20000);

  it("renders the server state verbatim after a red click", async () => {
    const ctl = new SessionController(BASE, fetch as never);
    await ctl.create({
      red: "path:2",
      blue: "clique:3",
      human_role: "painter",
      engine: "builder:clique",
    });
    const state = await ctl.sendColor("r");
    expect(state.winner).toBe("r");
    expect(render(state)).toContain("red wins in 1 turns");
  }, 20000);
});
