import { describe, expect, it } from "vitest";

import {
  back,
  canBack,
  canForward,
  current,
  DEFAULT_PARAMS,
  forward,
  initialHistory,
  visit,
} from "../src/state";
import type { ViewParams } from "../src/types";

function micro(query: string): ViewParams {
  return { ...DEFAULT_PARAMS, kind: "micro", causeQuery: query };
}

describe("view history", () => {
  it("starts with one entry and no navigation", () => {
    const history = initialHistory();
    expect(current(history)).toEqual(DEFAULT_PARAMS);
    expect(canBack(history)).toBe(false);
    expect(canForward(history)).toBe(false);
  });

  it("visits push entries; back and forward replay them", () => {
    let history = initialHistory();
    history = visit(history, micro("nuclear power"));
    history = visit(history, micro("global warming"));
    expect(current(history).causeQuery).toBe("global warming");

    history = back(history);
    expect(current(history).causeQuery).toBe("nuclear power");
    expect(canForward(history)).toBe(true);

    history = forward(history);
    expect(current(history).causeQuery).toBe("global warming");
  });

  it("a sample slider change records the previous view", () => {
    let history = initialHistory({ ...DEFAULT_PARAMS, sample: 0.1 });
    history = visit(history, { ...DEFAULT_PARAMS, sample: 0.2 });
    expect(current(history).sample).toBe(0.2);
    history = back(history);
    expect(current(history).sample).toBe(0.1);
  });

  it("visiting after back truncates the forward branch", () => {
    let history = initialHistory();
    history = visit(history, micro("one"));
    history = visit(history, micro("two"));
    history = back(history);
    history = visit(history, micro("three"));
    expect(canForward(history)).toBe(false);
    expect(current(history).causeQuery).toBe("three");
    history = back(history);
    expect(current(history).causeQuery).toBe("one");
  });

  it("back/forward at the ends are no-ops", () => {
    let history = initialHistory();
    history = back(history);
    expect(current(history)).toEqual(DEFAULT_PARAMS);
    history = forward(history);
    expect(current(history)).toEqual(DEFAULT_PARAMS);
  });
});
