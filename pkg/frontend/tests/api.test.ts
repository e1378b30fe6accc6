import { afterEach, describe, expect, it, vi } from "vitest";
import { ApiClient, ApiError } from "../src/api.js";
import { emptyFilter } from "../src/types.js";

function mockFetch(status: number, body: unknown): ReturnType<typeof vi.fn> {
  const fn = vi.fn(async () => ({
    ok: status >= 200 && status < 300,
    status,
    json: async () => body,
  }));
  vi.stubGlobal("fetch", fn);
  return fn;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient", () => {
  it("requests the plain graph URL when no filters are set", async () => {
    const fetchMock = mockFetch(200, { nodes: [], edges: [] });
    await new ApiClient().graph("classic", emptyFilter());
    expect(fetchMock.mock.calls[0][0]).toBe("/api/networks/classic/graph");
  });

  it("serializes filter tags as sorted comma-separated parameters", async () => {
    const fetchMock = mockFetch(200, { nodes: [], edges: [] });
    await new ApiClient().graph("classic", {
      problemTags: new Set(["ssp-np-complete", "np-complete"]),
      reductionTags: new Set(["parsimonious"]),
    });
    const url = fetchMock.mock.calls[0][0] as string;
    expect(url).toContain("problem_tags=np-complete%2Cssp-np-complete");
    expect(url).toContain("reduction_tags=parsimonious");
  });

  it("URL-encodes search queries", async () => {
    const fetchMock = mockFetch(200, []);
    await new ApiClient().search("classic", "node cover");
    expect(fetchMock.mock.calls[0][0]).toBe("/api/networks/classic/search?q=node%20cover");
  });

  it("raises ApiError carrying the backend error code", async () => {
    mockFetch(404, { error: { code: "unknown-problem", message: "no such problem" } });
    const error = await new ApiClient().problem("classic", "nope").catch((e) => e);
    expect(error).toBeInstanceOf(ApiError);
    expect(error.status).toBe(404);
    expect(error.code).toBe("unknown-problem");
    expect(error.message).toBe("no such problem");
  });

  it("falls back to a generic error for non-JSON failure bodies", async () => {
    vi.stubGlobal("fetch", vi.fn(async () => ({
      ok: false,
      status: 500,
      json: async () => {
        throw new SyntaxError("not json");
      },
    })));
    const error = await new ApiClient().networks().catch((e) => e);
    expect(error).toBeInstanceOf(ApiError);
    expect(error.code).toBe("http-error");
  });
});
