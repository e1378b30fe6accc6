import type {
  FilterState,
  GraphPayload,
  NetworkInfo,
  ProblemDetail,
  ReductionDetail,
  SearchResult,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

async function getJson<T>(url: string, signal?: AbortSignal): Promise<T> {
  const response = await fetch(url, { signal });
  if (!response.ok) {
    let code = "http-error";
    let message = `request failed with status ${response.status}`;
    try {
      const body = await response.json();
      if (body && body.error) {
        code = body.error.code ?? code;
        message = body.error.message ?? message;
      }
    } catch {
      // non-JSON error body; keep the generic message
    }
    throw new ApiError(response.status, code, message);
  }
  return (await response.json()) as T;
}

/** What the app needs from the backend; tests substitute a fake. */
export interface AtlasApi {
  networks(signal?: AbortSignal): Promise<NetworkInfo[]>;
  graph(network: string, filter: FilterState, signal?: AbortSignal): Promise<GraphPayload>;
  problem(network: string, slug: string, signal?: AbortSignal): Promise<ProblemDetail>;
  reduction(network: string, slug: string, signal?: AbortSignal): Promise<ReductionDetail>;
  search(network: string, query: string, signal?: AbortSignal): Promise<SearchResult[]>;
}

export class ApiClient implements AtlasApi {
  constructor(private baseUrl: string = "/api") {}

  networks(signal?: AbortSignal): Promise<NetworkInfo[]> {
    return getJson(`${this.baseUrl}/networks`, signal);
  }

  graph(network: string, filter: FilterState, signal?: AbortSignal): Promise<GraphPayload> {
    const params = new URLSearchParams();
    if (filter.problemTags.size > 0) {
      params.set("problem_tags", [...filter.problemTags].sort().join(","));
    }
    if (filter.reductionTags.size > 0) {
      params.set("reduction_tags", [...filter.reductionTags].sort().join(","));
    }
    const query = params.toString();
    return getJson(`${this.baseUrl}/networks/${network}/graph${query ? "?" + query : ""}`, signal);
  }

  problem(network: string, slug: string, signal?: AbortSignal): Promise<ProblemDetail> {
    return getJson(`${this.baseUrl}/networks/${network}/problems/${slug}`, signal);
  }

  reduction(network: string, slug: string, signal?: AbortSignal): Promise<ReductionDetail> {
    return getJson(`${this.baseUrl}/networks/${network}/reductions/${slug}`, signal);
  }

  search(network: string, query: string, signal?: AbortSignal): Promise<SearchResult[]> {
    return getJson(
      `${this.baseUrl}/networks/${network}/search?q=${encodeURIComponent(query)}`,
      signal,
    );
  }
}
