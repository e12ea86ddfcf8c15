import { describe, expect, it } from "vitest";

import { firePreview, mood, resolveShape, whatIfOptions } from "../src/firing.js";

describe("resolveShape", () => {
  it("builds the two-vertex path from its label", () => {
    const shape = resolveShape({ label: "A2" }, [1, 2]);
    expect(shape.n).toBe(2);
    expect(shape.arrows).toEqual([
      [0, 1],
      [1, 0],
    ]);
    expect(shape.active).toEqual(new Set([1, 2]));
  });

  it("gives the F4 double edge its direction", () => {
    const shape = resolveShape({ label: "F4" }, []);
    expect(shape.arrows[2]![1]).toBe(2); // two arrows from 2 into 3
    expect(shape.arrows[1]![2]).toBe(1);
  });

  it("defaults a missing reverse direction to one arrow", () => {
    const shape = resolveShape(
      { n: 2, edges: [{ from: 1, to: 2, arrows: 3 }] },
      [],
    );
    expect(shape.arrows[1]![0]).toBe(3);
    expect(shape.arrows[0]![1]).toBe(1);
  });
});

describe("moods", () => {
  const a2 = resolveShape({ label: "A2" }, [1, 2]);

  it("sources are sad at zero", () => {
    expect(mood(a2, [0, 0], 1)).toBe("sad");
    expect(mood(a2, [0, 0], 2)).toBe("sad");
  });

  it("the finished board is all excited", () => {
    expect(mood(a2, [2, 2], 1)).toBe("excited");
    expect(mood(a2, [2, 2], 2)).toBe("excited");
  });

  it("equality means happy", () => {
    const a3mid = resolveShape({ label: "A3" }, [2]);
    expect(mood(a3mid, [1, 1, 0], 2)).toBe("happy");
  });
});

describe("firePreview", () => {
  it("replays the two-source walk on the path", () => {
    const a2 = resolveShape({ label: "A2" }, [1, 2]);
    let chips = [0, 0];
    chips = firePreview(a2, chips, 1);
    expect(chips).toEqual([1, 0]);
    chips = firePreview(a2, chips, 2);
    expect(chips).toEqual([1, 2]);
    chips = firePreview(a2, chips, 1);
    expect(chips).toEqual([2, 2]);
  });

  it("doubles the long neighbor when the short F4 vertex fires", () => {
    const f4 = resolveShape({ label: "F4" }, []);
    expect(firePreview(f4, [1, 1, 0, 0], 3)).toEqual([1, 1, 2, 0]);
  });
});

describe("whatIfOptions", () => {
  it("lists exactly the sad vertices with their successors", () => {
    const a2 = resolveShape({ label: "A2" }, [1, 2]);
    const options = whatIfOptions(a2, [1, 0]);
    expect(options).toEqual([{ vertex: 2, result: [1, 2], gain: 2 }]);
  });

  it("is empty at a terminal configuration", () => {
    const a2 = resolveShape({ label: "A2" }, [1, 2]);
    expect(whatIfOptions(a2, [2, 2])).toEqual([]);
  });

  it("only the source is sad at the start", () => {
    const a4 = resolveShape({ label: "A4" }, [2]);
    const options = whatIfOptions(a4, [0, 0, 0, 0]);
    expect(options.map((o) => o.vertex)).toEqual([2]);
  });
});
