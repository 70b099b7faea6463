/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_drive_free: (a: number, b: number) => void;
export const __wbg_laneview_free: (a: number, b: number) => void;
export const drive: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const drive_abort_reason: (a: number) => [number, number];
export const drive_completed: (a: number) => number;
export const drive_eps: (a: number) => [number, number];
export const drive_gamma: (a: number) => [number, number];
export const drive_max_abs_eps: (a: number) => [number, number];
export const drive_perception_events: (a: number) => [number, number];
export const drive_phihat0: (a: number) => [number, number];
export const drive_steady_offset: (a: number) => [number, number];
export const drive_time: (a: number) => [number, number];
export const drive_track: (a: number) => [number, number];
export const laneView: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const laneview_coeffs: (a: number) => [number, number];
export const laneview_lane: (a: number) => [number, number];
export const laneview_max_gap: (a: number) => number;
export const laneview_pose: (a: number) => [number, number];
export const laneview_tau_omega: (a: number) => number;
export const laneview_truth: (a: number) => [number, number];
export const roadPoints: (a: number, b: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
