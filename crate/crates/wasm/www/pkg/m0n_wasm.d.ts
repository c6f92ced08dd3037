/* tslint:disable */
/* eslint-disable */

/**
 * Flips the sign of chord `{i, j}`.
 */
export function flip(n: number, signs: string, i: number, j: number): string;

/**
 * Pattern, statistics and drawing for a sign string.
 */
export function inspect(n: number, signs: string): string;

/**
 * The pattern that the chart of an ordering makes positive.
 */
export function sign_of(n: number, ordering: string): string;

/**
 * Runs the solver on a sign string; the drawing is relabelled by the result.
 */
export function solve(n: number, signs: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly flip: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly inspect: (a: number, b: number, c: number) => [number, number];
    readonly sign_of: (a: number, b: number, c: number) => [number, number];
    readonly solve: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
