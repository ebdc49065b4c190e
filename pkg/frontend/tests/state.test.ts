import { describe, expect, it } from "vitest";

import {
  appendBotTurn,
  appendSystemMessage,
  appendUserMessage,
  clampRadius,
  initialState,
  toggleExplanation,
  withRadius,
  withSession,
} from "../src/state.js";
import type { BotTurn } from "../src/types.js";

const turn: BotTurn = {
  reply: "hello",
  topic: "like_movie(john,titanic)",
  chosen: "talk_preference(john,titanic,trivia)",
  rcc: {
    topic: "like_movie(john,titanic)",
    radius: 3,
    members: [{ atom: "like_movie(john,titanic)", value: true, distance: 0 }],
  },
  path: [],
};

describe("radius", () => {
  it("clamps into [0, 10]", () => {
    expect(clampRadius(-2)).toBe(0);
    expect(clampRadius(0)).toBe(0);
    expect(clampRadius(7)).toBe(7);
    expect(clampRadius(99)).toBe(10);
    expect(clampRadius(NaN)).toBe(3);
  });

  it("applies to the state without touching messages", () => {
    const state = withRadius(initialState(), 5);
    expect(state.radius).toBe(5);
    expect(state.messages).toEqual([]);
  });
});

describe("messages", () => {
  it("are append-only across transitions", () => {
    let state = initialState();
    state = appendUserMessage(state, "hi", 1);
    const snapshot = [...state.messages];
    state = appendBotTurn(state, turn, 2);
    state = appendSystemMessage(state, "oops", 3);
    expect(state.messages.slice(0, 1)).toEqual(snapshot);
    expect(state.messages.map((m) => m.role)).toEqual(["user", "bot", "system"]);
  });

  it("bot turns update the rcc panel state", () => {
    const state = appendBotTurn(initialState(), turn, 1);
    expect(state.lastRcc?.radius).toBe(3);
    expect(state.lastTurn?.chosen).toBe("talk_preference(john,titanic,trivia)");
  });
});

describe("session and panels", () => {
  it("stores the session id", () => {
    expect(withSession(initialState(), "abc").sessionId).toBe("abc");
  });

  it("toggles explanation visibility", () => {
    const state = initialState();
    expect(toggleExplanation(state).explanationVisible).toBe(false);
    expect(toggleExplanation(toggleExplanation(state)).explanationVisible).toBe(true);
  });
});

describe("member click path lookup", () => {
  it("finds the most recent stored turn that chose the atom", async () => {
    const { pathForAtom, withSelectedPath } = await import("../src/state.js");
    const step = { rule: 1, from: "a", to: "b", sign: "positive" as const };
    const turns = [
      { chosen: "x", path: [] },
      { chosen: "y", path: [step] },
      { chosen: null, path: [] },
    ];
    expect(pathForAtom(turns, "y")).toEqual([step]);
    expect(pathForAtom(turns, "zz")).toBeNull();
    const state = withSelectedPath(initialState(), "y", [step]);
    expect(state.selectedAtom).toBe("y");
    expect(state.selectedPath).toEqual([step]);
    expect(state.explanationVisible).toBe(true);
  });

  it("bot turns preselect the chosen atom's path", () => {
    const state = appendBotTurn(initialState(), turn, 1);
    expect(state.selectedAtom).toBe(turn.chosen);
    expect(state.selectedPath).toEqual(turn.path);
  });
});
