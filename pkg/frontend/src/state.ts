// View state and navigable history. Every steering action produces a new
// entry; back/forward replay previously visited views (the macro -> micro
// investigative loop).

import type { ViewParams } from "./types";

export interface ViewState {
  params: ViewParams;
  selection: string | null;
}

export const DEFAULT_PARAMS: ViewParams = {
  kind: "macro",
  role: "cause",
  sample: 0.1,
  seed: 42,
  causeQuery: "",
  userA: "",
  userB: "",
  minWeight: 1,
};

export interface History {
  entries: ViewParams[];
  cursor: number;
}

export function initialHistory(params: ViewParams = DEFAULT_PARAMS): History {
  return { entries: [params], cursor: 0 };
}

export function current(history: History): ViewParams {
  return history.entries[history.cursor];
}

/** Visit a new view: truncates any forward entries, like a browser. */
export function visit(history: History, params: ViewParams): History {
  const entries = history.entries.slice(0, history.cursor + 1);
  entries.push(params);
  return { entries, cursor: entries.length - 1 };
}

export function canBack(history: History): boolean {
  return history.cursor > 0;
}

export function canForward(history: History): boolean {
  return history.cursor < history.entries.length - 1;
}

export function back(history: History): History {
  return canBack(history)
    ? { entries: history.entries, cursor: history.cursor - 1 }
    : history;
}

export function forward(history: History): History {
  return canForward(history)
    ? { entries: history.entries, cursor: history.cursor + 1 }
    : history;
}
