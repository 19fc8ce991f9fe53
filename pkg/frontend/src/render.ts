// Board SVG as a pure function of the view model: same input, same markup.

import type { BoardViewModel } from './viewmodel.js';

export const SCALE = 48;
export const PAD = 26;

const sx = (x: number): number => PAD + x * SCALE;
const sy = (vm: { n: number }, y: number): number => PAD + (vm.n + 1 - y) * SCALE;

export function renderBoardSvg(vm: BoardViewModel): string {
  const width = 2 * PAD + (vm.m + 1) * SCALE;
  const height = 2 * PAD + (vm.n + 1) * SCALE;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `width="${width}" height="${height}" role="img" aria-label="game board">`,
  );
  parts.push(
    `<rect x="${sx(0)}" y="${sy(vm, vm.n + 1)}" width="${(vm.m + 1) * SCALE}" ` +
      `height="${(vm.n + 1) * SCALE}" class="frame"/>`,
  );

  for (const v of vm.vertices) {
    if (v.positive) {
      parts.push(`<circle cx="${sx(v.i)}" cy="${sy(vm, v.j)}" r="16" class="positive"/>`);
    }
  }

  for (const e of vm.edges) {
    const coords =
      `x1="${sx(e.x1)}" y1="${sy(vm, e.y1)}" x2="${sx(e.x2)}" y2="${sy(vm, e.y2)}"`;
    const classes = ['edge'];
    if (e.removed) classes.push('removed');
    if (e.clickable) classes.push('clickable');
    if (e.justPlayed) classes.push(`played-${e.justPlayed}`);
    parts.push(`<line ${coords} class="${classes.join(' ')}"/>`);
    if (e.clickable && e.to) {
      parts.push(
        `<line ${coords} class="hit" data-to="${e.to[0]},${e.to[1]}"/>`,
      );
    }
  }

  for (const [x1, y1, x2, y2] of vm.trailSegments) {
    parts.push(
      `<line x1="${sx(x1)}" y1="${sy(vm, y1)}" x2="${sx(x2)}" y2="${sy(vm, y2)}" class="trail"/>`,
    );
  }

  for (const v of vm.vertices) {
    const cx = sx(v.i);
    const cy = sy(vm, v.j);
    parts.push(
      `<circle cx="${cx}" cy="${cy}" r="${v.inKernel ? 9 : 5}" class="${v.inKernel ? 'vertex kernel' : 'vertex'}"/>`,
    );
    if (v.isEngineTarget) {
      parts.push(`<circle cx="${cx}" cy="${cy}" r="13" class="target"/>`);
    }
    if (v.isRoot) {
      parts.push(`<circle cx="${cx}" cy="${cy}" r="14" class="root"/>`);
    }
  }

  parts.push('</svg>');
  return parts.join('');
}
