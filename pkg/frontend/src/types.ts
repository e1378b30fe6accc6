/** Payload shapes of the atlas JSON API. */

export interface NetworkInfo {
  id: string;
  display_name: string;
  problem_count: number;
  reduction_count: number;
  problem_tags: string[];
  reduction_tags: string[];
}

export interface GraphNode {
  slug: string;
  label: string;
  tags: string[];
}

export interface GraphEdge {
  slug: string;
  from: string;
  to: string;
  tags: string[];
}

export interface GraphPayload {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface ProblemPayload {
  slug: string;
  network: string;
  name: string;
  abbreviation: string;
  alternative_names: string[];
  description: string;
  completeness: string[];
  references: string;
}

export interface ReductionPayload {
  slug: string;
  network: string;
  from: string;
  to: string;
  description: string;
  properties: string[];
  references: string;
}

export interface ProblemDetail {
  problem: ProblemPayload;
  incident_reductions: ReductionPayload[];
}

export interface ReductionDetail {
  reduction: ReductionPayload;
  from_problem: ProblemPayload;
  to_problem: ProblemPayload;
}

export interface SearchResult {
  slug: string;
  matched_name: string;
  rank_class: string;
}

export type TagKind = "problem" | "reduction";

export interface FilterState {
  problemTags: Set<string>;
  reductionTags: Set<string>;
}

export type Selection =
  | { kind: "node"; slug: string }
  | { kind: "edge"; slug: string }
  | null;

export function emptyFilter(): FilterState {
  return { problemTags: new Set(), reductionTags: new Set() };
}

export function filterIsEmpty(filter: FilterState): boolean {
  return filter.problemTags.size === 0 && filter.reductionTags.size === 0;
}
