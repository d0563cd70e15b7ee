/* tslint:disable */
/* eslint-disable */

export class Game {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * `variant` is `"convex"` or `"empty"`.
     */
    constructor(variant: string);
    /**
     * Places player 1's point (rational or decimal strings) and the
     * engine's reply; returns the move outcome as JSON.
     */
    play(x: string, y: string): string;
    /**
     * Board as SVG, optionally shading the cells where the next point loses.
     */
    svg(overlay: boolean): string;
    /**
     * Current game as a JSON trace.
     */
    trace(): string;
}

/**
 * Region (`I`, `O`, `S` or `Z`) of point `(x, y)` against the convex
 * 4-gon given as eight coordinates `x0 y0 x1 y1 ...`.
 */
export function regionOf(quad: string, x: string, y: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_game_free: (a: number, b: number) => void;
    readonly game_new: (a: number, b: number) => [number, number, number];
    readonly game_play: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly game_svg: (a: number, b: number) => [number, number, number, number];
    readonly game_trace: (a: number) => [number, number];
    readonly regionOf: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
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
