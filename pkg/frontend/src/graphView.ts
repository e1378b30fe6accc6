import { initialPositions, runLayout, type LayoutNode } from "./layout.js";
import type { GraphPayload, Selection } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface GraphViewCallbacks {
  onNodeClick(slug: string): void;
  onEdgeClick(slug: string): void;
  onBackgroundClick(): void;
}

export interface Camera {
  cx: number;
  cy: number;
  zoom: number;
}

const WORLD = { width: 1000, height: 700 };
const NODE_RADIUS = 14;

/** SVG renderer for one network graph: physics layout, arrowed directed
 * edges, abbreviation labels, click selection, node dragging, camera
 * focus/zoom. Rendering is data-driven: the element sets always mirror the
 * last payload passed to render(). */
export class GraphView {
  readonly svg: SVGSVGElement;
  private notice: HTMLElement;
  private banner: HTMLElement;
  private edgeLayer!: SVGGElement;
  private nodeLayer!: SVGGElement;
  private positions = new Map<string, LayoutNode>();
  private graph: GraphPayload = { nodes: [], edges: [] };
  private camera: Camera = { cx: WORLD.width / 2, cy: WORLD.height / 2, zoom: 1 };

  constructor(
    container: HTMLElement,
    private callbacks: GraphViewCallbacks,
  ) {
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("class", "graph-canvas");
    this.svg.appendChild(this.buildDefs());
    this.edgeLayer = document.createElementNS(SVG_NS, "g");
    this.nodeLayer = document.createElementNS(SVG_NS, "g");
    this.svg.appendChild(this.edgeLayer);
    this.svg.appendChild(this.nodeLayer);
    this.svg.addEventListener("click", (event) => {
      if (event.target === this.svg) this.callbacks.onBackgroundClick();
    });

    this.notice = document.createElement("div");
    this.notice.className = "graph-notice";
    this.notice.hidden = true;

    this.banner = document.createElement("div");
    this.banner.className = "error-banner";
    this.banner.hidden = true;

    container.appendChild(this.banner);
    container.appendChild(this.notice);
    container.appendChild(this.svg);
    this.applyCamera();
  }

  private buildDefs(): SVGElement {
    const defs = document.createElementNS(SVG_NS, "defs");
    const marker = document.createElementNS(SVG_NS, "marker");
    marker.setAttribute("id", "arrowhead");
    marker.setAttribute("markerWidth", "10");
    marker.setAttribute("markerHeight", "8");
    marker.setAttribute("refX", "9");
    marker.setAttribute("refY", "4");
    marker.setAttribute("orient", "auto");
    const tip = document.createElementNS(SVG_NS, "path");
    tip.setAttribute("d", "M0,0 L10,4 L0,8 z");
    tip.setAttribute("class", "arrowhead");
    marker.appendChild(tip);
    defs.appendChild(marker);
    return defs;
  }

  showError(message: string): void {
    this.banner.textContent = message;
    this.banner.hidden = false;
  }

  clearError(): void {
    this.banner.hidden = true;
  }

  render(graph: GraphPayload, preserveCamera = false): void {
    this.clearError();
    this.graph = graph;
    this.notice.hidden = graph.nodes.length > 0;
    this.notice.textContent = graph.nodes.length > 0 ? "" : "no elements match the active filters";

    // keep positions of surviving nodes so filter toggles do not reshuffle the map
    const kept = new Map<string, LayoutNode>();
    const fresh: string[] = [];
    for (const node of graph.nodes) {
      const existing = this.positions.get(node.slug);
      if (existing) kept.set(node.slug, existing);
      else fresh.push(node.slug);
    }
    for (const layoutNode of initialPositions(fresh, WORLD.width, WORLD.height)) {
      kept.set(layoutNode.id, layoutNode);
    }
    this.positions = kept;
    const layoutNodes = graph.nodes.map((node) => this.positions.get(node.slug)!);
    runLayout(layoutNodes, graph.edges.map((e) => ({ from: e.from, to: e.to })), {
      width: WORLD.width,
      height: WORLD.height,
      iterations: fresh.length > 0 ? 250 : 60,
    });

    if (!preserveCamera) {
      this.camera = { cx: WORLD.width / 2, cy: WORLD.height / 2, zoom: 1 };
    }
    this.redraw();
    this.applyCamera();
  }

  private redraw(): void {
    this.edgeLayer.replaceChildren();
    this.nodeLayer.replaceChildren();

    for (const edge of this.graph.edges) {
      const from = this.positions.get(edge.from);
      const to = this.positions.get(edge.to);
      if (!from || !to) continue;
      const line = document.createElementNS(SVG_NS, "line");
      const trimmed = trimToRadius(from, to, NODE_RADIUS + 4);
      line.setAttribute("x1", String(trimmed.x1));
      line.setAttribute("y1", String(trimmed.y1));
      line.setAttribute("x2", String(trimmed.x2));
      line.setAttribute("y2", String(trimmed.y2));
      line.setAttribute("class", "edge");
      line.setAttribute("marker-end", "url(#arrowhead)");
      line.dataset.edgeSlug = edge.slug;
      line.addEventListener("click", (event) => {
        event.stopPropagation();
        this.callbacks.onEdgeClick(edge.slug);
      });
      this.edgeLayer.appendChild(line);
    }

    for (const node of this.graph.nodes) {
      const position = this.positions.get(node.slug)!;
      const group = document.createElementNS(SVG_NS, "g");
      group.setAttribute("class", "node");
      group.setAttribute("transform", `translate(${position.x},${position.y})`);
      group.dataset.nodeSlug = node.slug;

      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("r", String(NODE_RADIUS));
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("class", "node-label");
      label.setAttribute("dy", String(-NODE_RADIUS - 4));
      label.setAttribute("text-anchor", "middle");
      label.textContent = node.label;

      group.appendChild(circle);
      group.appendChild(label);
      group.addEventListener("click", (event) => {
        event.stopPropagation();
        this.callbacks.onNodeClick(node.slug);
      });
      this.attachDrag(group, node.slug);
      this.nodeLayer.appendChild(group);
    }
  }

  private attachDrag(group: SVGGElement, slug: string): void {
    group.addEventListener("pointerdown", (down) => {
      const position = this.positions.get(slug);
      if (!position) return;
      position.fixed = true;
      const startX = down.clientX;
      const startY = down.clientY;
      const origin = { x: position.x, y: position.y };
      const move = (event: PointerEvent) => {
        position.x = origin.x + (event.clientX - startX) / this.camera.zoom;
        position.y = origin.y + (event.clientY - startY) / this.camera.zoom;
        this.redraw();
        this.applyHighlightClasses();
      };
      const up = () => {
        window.removeEventListener("pointermove", move);
        window.removeEventListener("pointerup", up);
      };
      window.addEventListener("pointermove", move);
      window.addEventListener("pointerup", up);
    });
  }

  // -- selection highlighting --

  private highlighted: { nodes: Set<string>; edges: Set<string> } | null = null;

  setSelection(selection: Selection, incidentEdges: string[] = []): void {
    if (selection === null) {
      this.highlighted = null;
    } else if (selection.kind === "node") {
      this.highlighted = { nodes: new Set([selection.slug]), edges: new Set(incidentEdges) };
    } else {
      const edge = this.graph.edges.find((e) => e.slug === selection.slug);
      this.highlighted = {
        nodes: new Set(edge ? [edge.from, edge.to] : []),
        edges: new Set([selection.slug]),
      };
    }
    this.applyHighlightClasses();
  }

  private applyHighlightClasses(): void {
    const active = this.highlighted;
    for (const element of this.nodeLayer.querySelectorAll<SVGGElement>("g.node")) {
      const slug = element.dataset.nodeSlug!;
      element.classList.toggle("highlighted", active !== null && active.nodes.has(slug));
      element.classList.toggle("dimmed", active !== null && !active.nodes.has(slug));
    }
    for (const element of this.edgeLayer.querySelectorAll<SVGLineElement>("line.edge")) {
      const slug = element.dataset.edgeSlug!;
      element.classList.toggle("highlighted", active !== null && active.edges.has(slug));
      element.classList.toggle("dimmed", active !== null && !active.edges.has(slug));
    }
  }

  // -- camera --

  getCamera(): Camera {
    return { ...this.camera };
  }

  focusOn(slug: string, zoom = 1.8): boolean {
    const position = this.positions.get(slug);
    if (!position) return false;
    this.camera = { cx: position.x, cy: position.y, zoom };
    this.applyCamera();
    return true;
  }

  private applyCamera(): void {
    const width = WORLD.width / this.camera.zoom;
    const height = WORLD.height / this.camera.zoom;
    this.svg.setAttribute(
      "viewBox",
      `${this.camera.cx - width / 2} ${this.camera.cy - height / 2} ${width} ${height}`,
    );
  }

  nodeSlugs(): string[] {
    return [...this.nodeLayer.querySelectorAll<SVGGElement>("g.node")].map((g) => g.dataset.nodeSlug!);
  }

  edgeSlugs(): string[] {
    return [...this.edgeLayer.querySelectorAll<SVGLineElement>("line.edge")].map((l) => l.dataset.edgeSlug!);
  }
}

function trimToRadius(
  from: { x: number; y: number },
  to: { x: number; y: number },
  radius: number,
): { x1: number; y1: number; x2: number; y2: number } {
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const dist = Math.sqrt(dx * dx + dy * dy) || 1;
  const ux = dx / dist;
  const uy = dy / dist;
  return {
    x1: from.x + ux * radius,
    y1: from.y + uy * radius,
    x2: to.x - ux * radius,
    y2: to.y - uy * radius,
  };
}
