import { escapeHtml, renderBibtex, renderMarkdown } from "./richtext.js";
import type { ProblemDetail, ReductionDetail } from "./types.js";

function tagChips(tags: string[]): string {
  if (tags.length === 0) return "";
  const chips = tags.map((tag) => `<span class="tag-chip">${escapeHtml(tag)}</span>`).join(" ");
  return `<div class="panel-tags">${chips}</div>`;
}

function referencesSection(bibtex: string): string {
  const rendered = renderBibtex(bibtex);
  return rendered ? `<h3>References</h3>${rendered}` : "";
}

export function renderProblemPanel(detail: ProblemDetail): string {
  const problem = detail.problem;
  const alternatives =
    problem.alternative_names.length > 0
      ? `<p class="alt-names">also known as: ${problem.alternative_names.map(escapeHtml).join(", ")}</p>`
      : "";
  const incident =
    detail.incident_reductions.length > 0
      ? `<h3>Reductions</h3><ul class="incident-list">${detail.incident_reductions
          .map(
            (r) =>
              `<li><a href="#" class="incident-link" data-reduction-slug="${escapeHtml(r.slug)}">` +
              `${escapeHtml(r.from)} → ${escapeHtml(r.to)}</a></li>`,
          )
          .join("")}</ul>`
      : "<p class=\"muted\">No incident reductions.</p>";
  return (
    `<h2 class="panel-title">${escapeHtml(problem.name)}</h2>` +
    `<p class="abbreviation">${escapeHtml(problem.abbreviation)}</p>` +
    alternatives +
    tagChips(problem.completeness) +
    `<div class="description">${renderMarkdown(problem.description)}</div>` +
    incident +
    referencesSection(problem.references)
  );
}

export function renderReductionPanel(detail: ReductionDetail): string {
  const reduction = detail.reduction;
  return (
    `<h2 class="panel-title">${escapeHtml(detail.from_problem.name)} → ${escapeHtml(detail.to_problem.name)}</h2>` +
    tagChips(reduction.properties) +
    `<div class="description">${renderMarkdown(reduction.description)}</div>` +
    `<h3>Problems</h3>` +
    `<div class="endpoint-summaries">` +
    endpointSummary("From", detail.from_problem.name, detail.from_problem.abbreviation, reduction.from) +
    endpointSummary("To", detail.to_problem.name, detail.to_problem.abbreviation, reduction.to) +
    `</div>` +
    referencesSection(reduction.references)
  );
}

function endpointSummary(role: string, name: string, abbreviation: string, slug: string): string {
  return (
    `<div class="endpoint"><span class="endpoint-role">${role}:</span> ` +
    `<a href="#" class="endpoint-link" data-problem-slug="${escapeHtml(slug)}">` +
    `${escapeHtml(name)} (${escapeHtml(abbreviation)})</a></div>`
  );
}

export function renderPanelError(message: string): string {
  return (
    `<div class="panel-error"><p>${escapeHtml(message)}</p>` +
    `<button type="button" class="retry-button">Retry</button></div>`
  );
}
