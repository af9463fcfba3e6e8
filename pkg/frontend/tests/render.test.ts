import { describe, expect, it } from "vitest";

import { render, renderControls } from "../src/render.js";
import { blueWin, builderTurn, fixtures, freshSession, midGame } from "./fixtures.js";

describe("render snapshots", () => {
  for (const [name, state] of Object.entries(fixtures)) {
    it(`renders ${name} deterministically`, () => {
      expect(render(state)).toMatchSnapshot();
    });
  }

  it("is a pure function of the state", () => {
    expect(render(midGame)).toEqual(render({ ...midGame }));
  });
});

describe("render details", () => {
  it("highlights the blue winning triangle", () => {
    const html = render(blueWin);
    const thick = html.match(/class="edge witness b"/g) ?? [];
    expect(thick).toHaveLength(3);
    expect(html).toContain("blue wins in 3 turns");
    expect(html).toContain("witness [1, 2, 3]");
  });

  it("draws the pending edge dashed", () => {
    const html = render(freshSession);
    expect(html).toContain('class="edge pending"');
    expect(html).toContain("stroke-dasharray");
  });

  it("shows both target thumbnails", () => {
    const html = render(freshSession);
    expect(html).toContain("<figcaption>path:2</figcaption>");
    expect(html).toContain("<figcaption>clique:3</figcaption>");
  });

  it("shows bound reports", () => {
    const html = render(builderTurn);
    expect(html).toContain("degree-threshold-lower: turns ≥ 2");
  });

  it("enables paint buttons only on the human's turn with an edge pending", () => {
    expect(renderControls(freshSession)).not.toContain("disabled");
    expect(renderControls(blueWin)).toContain("disabled");
    expect(renderControls({ ...freshSession, to_move: "engine" })).toContain(
      "disabled"
    );
    expect(renderControls(builderTurn)).toContain("disabled"); // no pending edge
  });
});
