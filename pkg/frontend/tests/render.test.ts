import { describe, expect, it } from "vitest";

import { memberCount, renderPath, renderRccPanel, sortMembers } from "../src/render.js";
import type { RccMember, RccResult } from "../src/types.js";

function rcc(members: RccMember[], radius: number | null = 3): RccResult {
  return { topic: "t", radius, members };
}

describe("sortMembers", () => {
  it("orders by distance then name", () => {
    const sorted = sortMembers([
      { atom: "b", value: true, distance: 2 },
      { atom: "a", value: true, distance: 2 },
      { atom: "c", value: true, distance: 0 },
      { atom: "z", value: true, distance: null },
    ]);
    expect(sorted.map((m) => m.atom)).toEqual(["c", "a", "b", "z"]);
  });
});

describe("renderRccPanel", () => {
  it("renders one row per member with the chosen one highlighted", () => {
    const html = renderRccPanel(
      rcc([
        { atom: "topic", value: true, distance: 0 },
        { atom: "talk_preference(john,titanic,trivia)", value: true, distance: 1 },
        { atom: "talk_preference(john,titanic,awards)", value: true, distance: 1 },
        { atom: "x", value: false, distance: 1 },
      ]),
      "talk_preference(john,titanic,trivia)",
    );
    expect(html.match(/<tr class="/g)?.length).toBe(4);
    expect(html).toContain('class="member chosen"');
    expect(html).toContain("not x");
  });

  it("renders eight rows for an eight-member neighborhood", () => {
    const members = Array.from({ length: 8 }, (_, i) => ({
      atom: `atom_${i}`,
      value: true,
      distance: i % 5,
    }));
    const html = renderRccPanel(rcc(members, 5), null);
    expect(html.match(/<tr class="member/g)?.length).toBe(8);
  });

  it("shows a placeholder when only the topic remains", () => {
    const html = renderRccPanel(rcc([{ atom: "t", value: true, distance: 0 }], 0), null);
    expect(html).toContain("Nothing nearby");
  });

  it("shows a placeholder before the first turn", () => {
    expect(renderRccPanel(null, null)).toContain("No neighborhood yet");
  });

  it("escapes markup in atoms", () => {
    const html = renderRccPanel(rcc([
      { atom: "a<b>", value: true, distance: 0 },
      { atom: "c", value: true, distance: 1 },
    ]), null);
    expect(html).not.toContain("a<b>");
    expect(html).toContain("a&lt;b&gt;");
  });
});

describe("renderPath", () => {
  const path = [
    { rule: 3, from: "like_movie(john,titanic)", to: "talk", sign: "positive" as const },
  ];

  it("renders clauses when visible", () => {
    const html = renderPath(path, true);
    expect(html).toContain("rule 3");
    expect(html).toContain("like_movie(john,titanic)");
  });

  it("hides when toggled off", () => {
    expect(renderPath(path, false)).toContain("hidden");
  });

  it("handles the empty path", () => {
    expect(renderPath([], true)).toContain("No connection");
  });
});

describe("memberCount", () => {
  it("counts members, zero for none", () => {
    expect(memberCount(null)).toBe(0);
    expect(memberCount(rcc([{ atom: "a", value: true, distance: 0 }]))).toBe(1);
  });
});
