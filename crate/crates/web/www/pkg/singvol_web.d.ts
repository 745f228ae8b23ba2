/* tslint:disable */
/* eslint-disable */

/**
 * Bounds on `Vol_m` for the ruled-surface cone polarized by
 * `H = x·C₀ + y·F`, along `a = 2^-k` for `k = 0..=k_max`.
 */
export function counterexample_table(h_c0: string, h_f: string, k_max: number): string;

/**
 * Cone over a genus `g` curve of degree `d`: volume through the graph
 * pipeline next to the closed form `(2g-2)²/d`, plus the volume curve over
 * `d = 1..=d_max` for plotting.
 */
export function curve_cone(genus: number, degree: number, d_max: number): string;

/**
 * Nef envelope and volume for a catalog name (`E8`, `cusp-4`, ...) or a
 * JSON graph document.
 */
export function graph_volume(source: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly counterexample_table: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly curve_cone: (a: number, b: number, c: number) => [number, number];
    readonly graph_volume: (a: number, b: number) => [number, number];
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
