// Wire types of the game service. The client renders these verbatim and
// never derives outcomes on its own.

export type Pair = [number, number];
export type EdgeWire = [number, number, number, number];

export interface ApiGame {
  id: string;
  m: number;
  n: number;
  root: Pair;
  removed_edges: EdgeWire[];
  to_move: 'human' | 'engine' | 'over';
  status: 'in_progress' | 'engine_won' | 'opponent_won';
  history: Pair[];
  engine_role: 'first' | 'second';
}

export interface TrailWire {
  segments: EdgeWire[];
  angle: 90 | 180;
  closed: boolean;
}

export interface AnalysisWire {
  m: number;
  n: number;
  d: number;
  vertex: Pair;
  outcome: 'P' | 'N';
  trail: TrailWire;
  kernel: Pair[];
  v?: Pair;
  labels?: [number, number, string][];
  removed_edge?: EdgeWire;
}

export interface ClassifyWire {
  outcome: 'P' | 'N';
  d: number;
  winning_move?: Pair;
}

export interface HintWire {
  outcome: 'P' | 'N' | 'unknown';
  move?: Pair;
}
