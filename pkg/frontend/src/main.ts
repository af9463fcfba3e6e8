/** Browser entry: one session per page load, driven by the query string.
 *
 *  ?red=path:2&blue=clique:3&role=painter&engine=builder:clique&server=...
 */

import { GatingError, ProtocolError, SessionController } from "./controller.js";
import { render } from "./render.js";
import type { Color } from "./types.js";

function toast(message: string) {
  const el = document.createElement("div");
  el.className = "toast";
  el.textContent = message;
  document.body.appendChild(el);
  setTimeout(() => el.remove(), 3000);
}

export async function start(root: HTMLElement) {
  const q = new URLSearchParams(window.location.search);
  const ctl = new SessionController(
    q.get("server") ?? "",
    fetch.bind(window) as never
  );

  const draw = () => {
    if (ctl.current) root.innerHTML = render(ctl.current);
  };

  root.addEventListener("click", async (ev) => {
    const button = (ev.target as HTMLElement).closest("button[data-color]");
    if (!(button instanceof HTMLButtonElement) || button.disabled) return;
    try {
      await ctl.sendColor(button.dataset.color as Color);
    } catch (err) {
      if (err instanceof GatingError || err instanceof ProtocolError) {
        toast(err.message);
      } else {
        throw err;
      }
    }
    draw();
  });

  await ctl.create({
    red: q.get("red") ?? "path:2",
    blue: q.get("blue") ?? "clique:3",
    human_role: (q.get("role") ?? "painter") as "painter" | "builder",
    engine: q.get("engine") ?? "builder:clique",
    seed: q.has("seed") ? Number(q.get("seed")) : null,
  });
  draw();
}
