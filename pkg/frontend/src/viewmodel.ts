// Pure derivation of everything the board shows from the latest server
// payloads. No outcome or strategy logic lives here: clickability is the
// mechanical move rule (edge touches the root and is still present),
// winners and kernels come from the wire.

import type { AnalysisWire, ApiGame, Pair } from './types.js';

export interface Overlays {
  trail: boolean;
  kernel: boolean;
  labels: boolean;
}

export interface VertexView {
  i: number;
  j: number;
  isRoot: boolean;
  inKernel: boolean;
  positive: boolean;
  isEngineTarget: boolean;
}

export interface EdgeView {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  removed: boolean;
  clickable: boolean;
  to: Pair | null;
  justPlayed: 'human' | 'engine' | null;
}

export interface BoardViewModel {
  m: number;
  n: number;
  status: ApiGame['status'];
  banner: string;
  vertices: VertexView[];
  edges: EdgeView[];
  trailSegments: [number, number, number, number][];
  engineRole: 'first' | 'second';
}

const edgeKey = (x1: number, y1: number, x2: number, y2: number): string => {
  const [p, q] = [[x1, y1], [x2, y2]].sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  return `${p[0]},${p[1]},${q[0]},${q[1]}`;
};

function walkVertices(game: ApiGame): Pair[] {
  // start vertex, then every visited root, straight from the wire
  if (game.history.length === 0) return [game.root];
  const walkEdges = new Set<string>();
  for (let t = 0; t + 1 < game.history.length; t++) {
    const [a, b] = [game.history[t], game.history[t + 1]];
    walkEdges.add(edgeKey(a[0], a[1], b[0], b[1]));
  }
  const first = game.history[0];
  let start: Pair = game.root;
  for (const [x1, y1, x2, y2] of game.removed_edges) {
    if (walkEdges.has(edgeKey(x1, y1, x2, y2))) continue;
    start = x1 === first[0] && y1 === first[1] ? [x2, y2] : [x1, y1];
  }
  return [start, ...game.history];
}

function lastPlayedEdges(game: ApiGame): Map<string, 'human' | 'engine'> {
  // engine moves are the history entries at its parity; mark the final
  // human/engine step each so the last exchange can be highlighted
  const walk = walkVertices(game);
  const out = new Map<string, 'human' | 'engine'>();
  const engineParity = game.engine_role === 'first' ? 0 : 1;
  for (let t = walk.length - 2; t >= 0 && out.size < 2; t--) {
    const mover: 'human' | 'engine' = t % 2 === engineParity ? 'engine' : 'human';
    if (![...out.values()].includes(mover)) {
      const [a, b] = [walk[t], walk[t + 1]];
      out.set(edgeKey(a[0], a[1], b[0], b[1]), mover);
    }
  }
  return out;
}

export function banner(game: ApiGame, busy: boolean): string {
  if (game.status === 'engine_won') return 'Engine wins';
  if (game.status === 'opponent_won') return 'You win';
  return busy ? 'Engine is replying…' : 'Your move: click an edge at the ringed vertex';
}

export function buildViewModel(
  game: ApiGame,
  analysis: AnalysisWire | null,
  overlays: Overlays,
  busy = false,
): BoardViewModel {
  const removed = new Set(game.removed_edges.map(([a, b, c, d]) => edgeKey(a, b, c, d)));
  const played = lastPlayedEdges(game);
  const [ri, rj] = game.root;
  const live = game.status === 'in_progress' && !busy;

  const kernel = new Set(
    overlays.kernel && analysis ? analysis.kernel.map(([i, j]) => `${i},${j}`) : [],
  );
  const positives = new Set(
    overlays.labels && analysis?.labels
      ? analysis.labels.filter(([, , lab]) => lab === 'positive').map(([i, j]) => `${i},${j}`)
      : [],
  );
  const target =
    overlays.kernel && analysis?.v ? `${analysis.v[0]},${analysis.v[1]}` : '';

  const vertices: VertexView[] = [];
  for (let j = 1; j <= game.n; j++) {
    for (let i = 1; i <= game.m; i++) {
      vertices.push({
        i,
        j,
        isRoot: i === ri && j === rj,
        inKernel: kernel.has(`${i},${j}`),
        positive: positives.has(`${i},${j}`),
        isEngineTarget: target === `${i},${j}`,
      });
    }
  }

  const edges: EdgeView[] = [];
  const pushEdge = (x1: number, y1: number, x2: number, y2: number) => {
    const key = edgeKey(x1, y1, x2, y2);
    const isRemoved = removed.has(key);
    const touchesRoot = (x1 === ri && y1 === rj) || (x2 === ri && y2 === rj);
    const clickable = live && touchesRoot && !isRemoved;
    const to: Pair | null = !clickable ? null : x1 === ri && y1 === rj ? [x2, y2] : [x1, y1];
    edges.push({
      x1,
      y1,
      x2,
      y2,
      removed: isRemoved,
      clickable,
      to,
      justPlayed: played.get(key) ?? null,
    });
  };
  for (let j = 1; j <= game.n; j++)
    for (let i = 1; i < game.m; i++) pushEdge(i, j, i + 1, j);
  for (let j = 1; j < game.n; j++)
    for (let i = 1; i <= game.m; i++) pushEdge(i, j, i, j + 1);

  return {
    m: game.m,
    n: game.n,
    status: game.status,
    banner: banner(game, busy),
    vertices,
    edges,
    trailSegments: overlays.trail && analysis ? analysis.trail.segments : [],
    engineRole: game.engine_role,
  };
}

export interface FormErrors {
  message: string | null;
}

export function validateForm(m: number, n: number, a: number, b: number): FormErrors {
  if (![m, n, a, b].every((x) => Number.isInteger(x))) {
    return { message: 'all four values must be integers' };
  }
  if (m < 1 || m > 50 || n < 1 || n > 50) {
    return { message: 'board sides must be between 1 and 50' };
  }
  if (a < 1 || a > m || b < 1 || b > n) {
    return { message: `start must lie on the board: 1..${m} x 1..${n}` };
  }
  return { message: null };
}
