/** Minimal client-side reading of the graph spec grammar, for thumbnails
 *  only. Game logic stays on the server. */

export interface TargetGraph {
  n: number;
  edges: Array<[number, number]>;
}

function range(a: number, b: number): number[] {
  const out = [];
  for (let i = a; i <= b; i++) out.push(i);
  return out;
}

export function parseSpec(spec: string): TargetGraph {
  const [family, ...rest] = spec.split(":");
  const args = rest.join(":");
  const edges: Array<[number, number]> = [];
  switch (family) {
    case "path": {
      const n = parseInt(args, 10);
      for (let i = 1; i < n; i++) edges.push([i, i + 1]);
      return { n, edges };
    }
    case "cycle": {
      const n = parseInt(args, 10);
      for (let i = 1; i < n; i++) edges.push([i, i + 1]);
      edges.push([1, n]);
      return { n, edges };
    }
    case "clique": {
      const n = parseInt(args, 10);
      for (let i = 1; i <= n; i++)
        for (let j = i + 1; j <= n; j++) edges.push([i, j]);
      return { n, edges };
    }
    case "biclique": {
      const [m, n] = args.split(",").map((s) => parseInt(s, 10));
      for (const i of range(1, m))
        for (const j of range(m + 1, m + n)) edges.push([i, j]);
      return { n: m + n, edges };
    }
    case "star": {
      const [a, b] = args.split(",").map((s) => parseInt(s, 10));
      const center = a + 1;
      for (const i of range(1, a)) edges.push([i, center]);
      for (const j of range(center + 1, a + b + 1)) edges.push([center, j]);
      return { n: a + b + 1, edges };
    }
    case "custom": {
      const [nPart, edgePart = ""] = rest;
      const n = parseInt(nPart, 10);
      for (const token of edgePart.split(",")) {
        if (!token) continue;
        const [u, v] = token.split("-").map((s) => parseInt(s, 10));
        edges.push(u < v ? [u, v] : [v, u]);
      }
      return { n, edges };
    }
    default:
      throw new Error(`unknown graph spec: ${spec}`);
  }
}
