import { ApiError } from "./api.js";
import { GraphView } from "./graphView.js";
import { renderPanelError, renderProblemPanel, renderReductionPanel } from "./panels.js";
import { emptyFilter, filterIsEmpty, } from "./types.js";
/** Wires the whole page together: network links, filter toolbar, graph
 * view, search-and-focus, and the detail panel. Holds no corpus state
 * beyond the last API responses. */
export class AtlasApp {
    constructor(root, api) {
        this.api = api;
        this.networks = [];
        this.activeNetwork = null;
        this.filter = emptyFilter();
        this.selection = null;
        this.lastGraph = { nodes: [], edges: [] };
        this.graphFetch = null;
        this.searchFetch = null;
        root.innerHTML = `
      <header class="topbar">
        <h1 class="site-title">Reduction Atlas</h1>
        <nav id="network-nav" class="network-nav"></nav>
        <div class="search-area">
          <input id="search-box" type="search" placeholder="Search problems…" autocomplete="off">
          <ul id="search-results" class="search-results" hidden></ul>
        </div>
      </header>
      <div id="filter-toolbar" class="filter-toolbar"></div>
      <div id="status-notice" class="status-notice" hidden></div>
      <main class="content">
        <div id="graph-container" class="graph-container"></div>
        <aside id="detail-panel" class="detail-panel" hidden></aside>
      </main>`;
        this.nav = root.querySelector("#network-nav");
        this.toolbar = root.querySelector("#filter-toolbar");
        this.panel = root.querySelector("#detail-panel");
        this.statusNotice = root.querySelector("#status-notice");
        this.searchInput = root.querySelector("#search-box");
        this.searchResults = root.querySelector("#search-results");
        this.view = new GraphView(root.querySelector("#graph-container"), {
            onNodeClick: (slug) => void this.onNodeClick(slug),
            onEdgeClick: (slug) => void this.onEdgeClick(slug),
            onBackgroundClick: () => this.clearSelection(),
        });
        this.searchInput.addEventListener("input", () => void this.onSearchInput());
    }
    async init() {
        try {
            this.networks = await this.api.networks();
        }
        catch (error) {
            this.view.showError(describeError(error));
            return;
        }
        this.renderNav();
        if (this.networks.length > 0) {
            await this.selectNetwork(this.networks[0].id);
        }
        else {
            this.view.render({ nodes: [], edges: [] });
        }
    }
    renderNav() {
        this.nav.replaceChildren(...this.networks.map((network) => {
            const button = document.createElement("button");
            button.type = "button";
            button.className = "network-link";
            button.dataset.networkId = network.id;
            button.textContent = `${network.display_name} (${network.problem_count})`;
            button.addEventListener("click", () => void this.selectNetwork(network.id));
            return button;
        }));
    }
    async selectNetwork(id) {
        this.activeNetwork = id;
        this.filter = emptyFilter();
        this.selection = null;
        this.panel.hidden = true;
        for (const link of this.nav.querySelectorAll(".network-link")) {
            link.classList.toggle("active", link.dataset.networkId === id);
        }
        this.renderToolbar();
        await this.refreshGraph(false);
    }
    activeNetworkInfo() {
        return this.networks.find((network) => network.id === this.activeNetwork);
    }
    renderToolbar() {
        const info = this.activeNetworkInfo();
        if (!info) {
            this.toolbar.replaceChildren();
            return;
        }
        const buttons = [];
        const addButtons = (tags, kind) => {
            for (const tag of tags) {
                const button = document.createElement("button");
                button.type = "button";
                button.className = `filter-button filter-${kind}`;
                button.dataset.filterTag = tag;
                button.dataset.filterKind = kind;
                button.textContent = tag;
                const set = kind === "problem" ? this.filter.problemTags : this.filter.reductionTags;
                button.classList.toggle("active", set.has(tag));
                button.addEventListener("click", () => void this.toggleFilter(tag, kind));
                buttons.push(button);
            }
        };
        addButtons(info.problem_tags, "problem");
        addButtons(info.reduction_tags, "reduction");
        this.toolbar.replaceChildren(...buttons);
    }
    async toggleFilter(tag, kind) {
        const set = kind === "problem" ? this.filter.problemTags : this.filter.reductionTags;
        const wasActive = set.has(tag);
        if (wasActive)
            set.delete(tag);
        else
            set.add(tag);
        this.renderToolbar();
        const ok = await this.refreshGraph(true);
        if (!ok) {
            // roll the toggle back so the UI matches the last rendered graph
            if (wasActive)
                set.add(tag);
            else
                set.delete(tag);
            this.renderToolbar();
        }
    }
    /** Refetch and render the active network's graph. Returns false when the
     * request failed (an error banner is shown instead). */
    async refreshGraph(preserveCamera) {
        if (!this.activeNetwork)
            return false;
        this.graphFetch?.abort();
        this.graphFetch = new AbortController();
        try {
            const graph = await this.api.graph(this.activeNetwork, this.filter, this.graphFetch.signal);
            this.lastGraph = graph;
            this.view.render(graph, preserveCamera);
            if (this.selection !== null && !this.selectionStillVisible()) {
                this.clearSelection();
            }
            else {
                this.reapplyHighlight();
            }
            return true;
        }
        catch (error) {
            if (isAbort(error))
                return false;
            this.view.showError(describeError(error));
            return false;
        }
    }
    selectionStillVisible() {
        if (this.selection === null)
            return false;
        if (this.selection.kind === "node") {
            const slug = this.selection.slug;
            return this.lastGraph.nodes.some((node) => node.slug === slug);
        }
        const slug = this.selection.slug;
        return this.lastGraph.edges.some((edge) => edge.slug === slug);
    }
    reapplyHighlight() {
        if (this.selection?.kind === "node") {
            const slug = this.selection.slug;
            const incident = this.lastGraph.edges
                .filter((edge) => edge.from === slug || edge.to === slug)
                .map((edge) => edge.slug);
            this.view.setSelection(this.selection, incident);
        }
        else {
            this.view.setSelection(this.selection);
        }
    }
    async onNodeClick(slug) {
        if (!this.activeNetwork)
            return;
        this.selection = { kind: "node", slug };
        this.reapplyHighlight();
        this.panel.hidden = false;
        this.panel.innerHTML = "<p class=\"muted\">Loading…</p>";
        try {
            const detail = await this.api.problem(this.activeNetwork, slug);
            this.panel.innerHTML = renderProblemPanel(detail);
            // the API's incident list is authoritative for highlighting
            const incident = detail.incident_reductions.map((r) => r.slug);
            this.view.setSelection(this.selection, incident.filter((s) => this.lastGraph.edges.some((edge) => edge.slug === s)));
            this.wirePanelLinks();
        }
        catch (error) {
            if (isAbort(error))
                return;
            this.showPanelError(describeError(error), () => void this.onNodeClick(slug));
        }
    }
    async onEdgeClick(slug) {
        if (!this.activeNetwork)
            return;
        this.selection = { kind: "edge", slug };
        this.reapplyHighlight();
        this.panel.hidden = false;
        this.panel.innerHTML = "<p class=\"muted\">Loading…</p>";
        try {
            const detail = await this.api.reduction(this.activeNetwork, slug);
            this.panel.innerHTML = renderReductionPanel(detail);
            this.wirePanelLinks();
        }
        catch (error) {
            if (isAbort(error))
                return;
            this.showPanelError(describeError(error), () => void this.onEdgeClick(slug));
        }
    }
    wirePanelLinks() {
        for (const link of this.panel.querySelectorAll("[data-reduction-slug]")) {
            link.addEventListener("click", (event) => {
                event.preventDefault();
                void this.onEdgeClick(link.dataset.reductionSlug);
            });
        }
        for (const link of this.panel.querySelectorAll("[data-problem-slug]")) {
            link.addEventListener("click", (event) => {
                event.preventDefault();
                void this.focusProblem(link.dataset.problemSlug);
            });
        }
    }
    showPanelError(message, retry) {
        this.panel.innerHTML = renderPanelError(message);
        this.panel.querySelector(".retry-button")?.addEventListener("click", retry);
    }
    clearSelection() {
        this.selection = null;
        this.panel.hidden = true;
        this.view.setSelection(null);
    }
    // -- search --
    async onSearchInput() {
        const query = this.searchInput.value.trim();
        this.searchFetch?.abort();
        if (!query || !this.activeNetwork) {
            this.searchResults.hidden = true;
            this.searchResults.replaceChildren();
            return;
        }
        this.searchFetch = new AbortController();
        try {
            const results = await this.api.search(this.activeNetwork, query, this.searchFetch.signal);
            this.searchResults.hidden = false;
            if (results.length === 0) {
                this.searchResults.innerHTML = "<li class=\"no-matches\">no matches</li>";
                return;
            }
            this.searchResults.replaceChildren(...results.map((result) => {
                const item = document.createElement("li");
                item.className = "search-result";
                item.dataset.resultSlug = result.slug;
                item.textContent = `${result.matched_name} (${result.rank_class})`;
                item.addEventListener("click", () => void this.searchAndFocus(result.slug));
                return item;
            }));
        }
        catch (error) {
            if (!isAbort(error)) {
                this.searchResults.hidden = false;
                this.searchResults.innerHTML = "<li class=\"no-matches\">search failed</li>";
            }
        }
    }
    /** Center the camera on a problem and open its panel; active filters
     * hiding the node are cleared first, with a visible notice. */
    async searchAndFocus(slug) {
        this.searchResults.hidden = true;
        this.searchInput.value = "";
        await this.focusProblem(slug);
    }
    async focusProblem(slug) {
        const visible = this.lastGraph.nodes.some((node) => node.slug === slug);
        if (!visible && !filterIsEmpty(this.filter)) {
            this.filter = emptyFilter();
            this.renderToolbar();
            this.showNotice("filters cleared to focus on the selected problem");
            await this.refreshGraph(true);
        }
        this.view.focusOn(slug);
        await this.onNodeClick(slug);
    }
    showNotice(message) {
        this.statusNotice.textContent = message;
        this.statusNotice.hidden = false;
    }
}
function isAbort(error) {
    return error instanceof DOMException && error.name === "AbortError";
}
function describeError(error) {
    if (error instanceof ApiError)
        return `${error.code}: ${error.message}`;
    return error instanceof Error ? error.message : String(error);
}
//# sourceMappingURL=app.js.map