/* tslint:disable */
/* eslint-disable */

/**
 * Sums catalog entry `id` to `digits` and compares it with its closed form.
 */
export function evaluate_identity(id: string, digits: number): string;

/**
 * Catalog ids with their closed forms, and the specialization cases with
 * their parameter intervals.
 */
export function list(): string;

/**
 * Both sides of a specialization at `t = permille / 1000`.
 */
export function specialization_sides(_case: string, permille: number, digits: number): string;

/**
 * `log10 |t_k|` for the first `n` terms of catalog entry `id`.
 */
export function term_profile(id: string, n: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly evaluate_identity: (a: number, b: number, c: number) => [number, number, number, number];
    readonly list: () => [number, number];
    readonly specialization_sides: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly term_profile: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
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
