/* tslint:disable */
/* eslint-disable */

/**
 * A sampled curve `y(x)` plus one summary number.
 */
export class Curve {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * One byte per point, meaning depends on the producer.
     */
    readonly flags: Uint8Array;
    readonly summary: number;
    readonly x: Float64Array;
    readonly y: Float64Array;
}

export function apqSweep(p: number, q: number, beta_min: number, beta_max: number, steps: number): Curve;

export function modulusProfile(kernel: string, k: number, s: number, delta_min: number): Curve;

export function rieszProfile(shape: string, width: number, alpha: number, half_width: number, resolution: number): Curve;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curve_free: (a: number, b: number) => void;
    readonly apqSweep: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly curve_flags: (a: number) => [number, number];
    readonly curve_summary: (a: number) => number;
    readonly curve_x: (a: number) => [number, number];
    readonly curve_y: (a: number) => [number, number];
    readonly modulusProfile: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly rieszProfile: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
