export class ApiError extends Error {
    constructor(status, code, message) {
        super(message);
        this.status = status;
        this.code = code;
    }
}
async function getJson(url, signal) {
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
        }
        catch {
            // non-JSON error body; keep the generic message
        }
        throw new ApiError(response.status, code, message);
    }
    return (await response.json());
}
export class ApiClient {
    constructor(baseUrl = "/api") {
        this.baseUrl = baseUrl;
    }
    networks(signal) {
        return getJson(`${this.baseUrl}/networks`, signal);
    }
    graph(network, filter, signal) {
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
    problem(network, slug, signal) {
        return getJson(`${this.baseUrl}/networks/${network}/problems/${slug}`, signal);
    }
    reduction(network, slug, signal) {
        return getJson(`${this.baseUrl}/networks/${network}/reductions/${slug}`, signal);
    }
    search(network, query, signal) {
        return getJson(`${this.baseUrl}/networks/${network}/search?q=${encodeURIComponent(query)}`, signal);
    }
}
//# sourceMappingURL=api.js.map