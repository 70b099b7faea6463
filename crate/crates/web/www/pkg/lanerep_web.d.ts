/* tslint:disable */
/* eslint-disable */

/**
 * Closed-loop run summary and traces.
 */
export class Drive {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    abort_reason(): string | undefined;
    completed(): boolean;
    eps(): Float64Array;
    gamma(): Float64Array;
    max_abs_eps(): number | undefined;
    perception_events(): Uint8Array;
    /**
     * Estimated and true φ̂₀ interleaved.
     */
    phihat0(): Float64Array;
    steady_offset(): number | undefined;
    time(): Float64Array;
    /**
     * Earth track of Q.
     */
    track(): Float64Array;
}

/**
 * Camera view from the relative state `(s, ε, θ)` on the road.
 */
export class LaneView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Body-frame graph coefficients, truncated to the requested order.
     */
    coeffs(): Float64Array;
    /**
     * Earth-frame points of the truncated graph over the look-ahead.
     */
    lane(): Float64Array;
    /**
     * Largest gap between the lane and the road over the look-ahead (m).
     */
    max_gap(): number;
    /**
     * `[x_Q, y_Q, ψ]`.
     */
    pose(): Float64Array;
    tau_omega(): number;
    /**
     * Earth-frame road points over the same stretch.
     */
    truth(): Float64Array;
}

export function drive(control_period: number, perception_period: number, prediction: boolean, duration: number, eps0: number): Drive;

export function laneView(s_period: number, corners: number, s: number, eps: number, theta_deg: number, order: number, look_ahead: number): LaneView;

export function roadPoints(s_period: number, corners: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_drive_free: (a: number, b: number) => void;
    readonly __wbg_laneview_free: (a: number, b: number) => void;
    readonly drive: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly drive_abort_reason: (a: number) => [number, number];
    readonly drive_completed: (a: number) => number;
    readonly drive_eps: (a: number) => [number, number];
    readonly drive_gamma: (a: number) => [number, number];
    readonly drive_max_abs_eps: (a: number) => [number, number];
    readonly drive_perception_events: (a: number) => [number, number];
    readonly drive_phihat0: (a: number) => [number, number];
    readonly drive_steady_offset: (a: number) => [number, number];
    readonly drive_time: (a: number) => [number, number];
    readonly drive_track: (a: number) => [number, number];
    readonly laneView: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly laneview_coeffs: (a: number) => [number, number];
    readonly laneview_lane: (a: number) => [number, number];
    readonly laneview_max_gap: (a: number) => number;
    readonly laneview_pose: (a: number) => [number, number];
    readonly laneview_tau_omega: (a: number) => number;
    readonly laneview_truth: (a: number) => [number, number];
    readonly roadPoints: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
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
