import { ApiClient, ApiError } from './api.js';
import { renderBoardSvg } from './render.js';
import type { AnalysisWire, ApiGame, Pair } from './types.js';
import { buildViewModel, validateForm, type Overlays } from './viewmodel.js';

const api = new ApiClient();

interface UiState {
  game: ApiGame | null;
  start: Pair | null;
  analysis: AnalysisWire | null;
  overlays: Overlays;
  busy: boolean;
}

const state: UiState = {
  game: null,
  start: null,
  analysis: null,
  overlays: { trail: false, kernel: false, labels: false },
  busy: false,
};

const el = <T extends HTMLElement>(id: string): T => {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
};

function setError(message: string | null): void {
  const box = el<HTMLDivElement>('error');
  box.textContent = message ?? '';
  box.hidden = !message;
}

function redraw(): void {
  const board = el<HTMLDivElement>('board');
  const status = el<HTMLDivElement>('status');
  if (!state.game) {
    board.innerHTML = '';
    status.textContent = 'start a game';
    return;
  }
  const vm = buildViewModel(state.game, state.analysis, state.overlays, state.busy);
  board.innerHTML = renderBoardSvg(vm);
  status.textContent = `${vm.banner} — engine plays ${vm.engineRole}`;
  el<HTMLButtonElement>('hint').disabled = vm.status !== 'in_progress' || state.busy;
}

async function ensureAnalysis(): Promise<void> {
  const wantsOverlay =
    state.overlays.trail || state.overlays.kernel || state.overlays.labels;
  if (!wantsOverlay || state.analysis || !state.game || !state.start) return;
  try {
    const [a, b] = state.start;
    state.analysis = await api.analysis(state.game.m, state.game.n, a, b);
  } catch (err) {
    setError(err instanceof ApiError ? `analysis failed: ${err.message}` : String(err));
  }
}

async function newGame(): Promise<void> {
  const m = Number(el<HTMLInputElement>('m').value);
  const n = Number(el<HTMLInputElement>('n').value);
  const a = Number(el<HTMLInputElement>('a').value);
  const b = Number(el<HTMLInputElement>('b').value);
  const role = el<HTMLSelectElement>('role').value as 'auto' | 'first' | 'second';

  const errors = validateForm(m, n, a, b);
  if (errors.message) {
    setError(errors.message);
    return;
  }
  setError(null);
  state.busy = true;
  redraw();
  try {
    state.game = await api.newGame(m, n, a, b, role === 'auto' ? undefined : role);
    state.start = [a, b];
    state.analysis = null;
    await ensureAnalysis();
  } catch (err) {
    setError(err instanceof ApiError ? err.message : String(err));
  } finally {
    state.busy = false;
    redraw();
  }
}

async function clickEdge(to: Pair): Promise<void> {
  if (!state.game || state.busy || state.game.status !== 'in_progress') return;
  state.busy = true;
  redraw();
  try {
    state.game = await api.move(state.game.id, to);
    setError(null);
  } catch (err) {
    if (err instanceof ApiError && err.status === 422) {
      setError(`rejected: ${err.message}`);
      window.setTimeout(() => setError(null), 2500);
    } else {
      setError(err instanceof ApiError ? err.message : String(err));
    }
  } finally {
    state.busy = false;
    redraw();
  }
}

async function showHint(): Promise<void> {
  if (!state.game) return;
  try {
    const hint = await api.hint(state.game.id);
    const move = hint.move ? `, try (${hint.move[0]},${hint.move[1]})` : '';
    setError(null);
    el<HTMLDivElement>('status').textContent =
      `hint: this position is ${hint.outcome}${move}`;
  } catch (err) {
    setError(err instanceof ApiError ? err.message : String(err));
  }
}

function wire(): void {
  el<HTMLFormElement>('new-game-form').addEventListener('submit', (ev) => {
    ev.preventDefault();
    void newGame();
  });
  el<HTMLButtonElement>('hint').addEventListener('click', () => void showHint());
  for (const name of ['trail', 'kernel', 'labels'] as const) {
    el<HTMLInputElement>(`overlay-${name}`).addEventListener('change', (ev) => {
      state.overlays[name] = (ev.target as HTMLInputElement).checked;
      void ensureAnalysis().then(redraw);
    });
  }
  el<HTMLDivElement>('board').addEventListener('click', (ev) => {
    const hit = (ev.target as Element).closest('line.hit');
    const data = hit?.getAttribute('data-to');
    if (!data) return;
    const [x, y] = data.split(',').map(Number);
    void clickEdge([x, y]);
  });
  redraw();
}

document.addEventListener('DOMContentLoaded', wire);
