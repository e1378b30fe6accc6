/** Rendering of corpus text: Markdown with TeX spans, plus BibTeX reference
 * lists. Everything is escaped before any HTML is generated, so corpus
 * content can never inject markup or scripts.
 */

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

const SAFE_URL = /^(https?:|mailto:)/i;
const HAS_SCHEME = /^[a-z][a-z0-9+.-]*:/i;

function sanitizeUrl(url: string): string | null {
  const trimmed = url.trim();
  if (SAFE_URL.test(trimmed)) return trimmed;
  if (!HAS_SCHEME.test(trimmed) && !trimmed.startsWith("//")) return trimmed; // relative
  return null;
}

// -- TeX --

const TEX_SYMBOLS: [RegExp, string][] = [
  [/\\le(?![a-zA-Z])/g, "≤"],
  [/\\ge(?![a-zA-Z])/g, "≥"],
  [/\\ne(?![a-zA-Z])/g, "≠"],
  [/\\in(?![a-zA-Z])/g, "∈"],
  [/\\notin(?![a-zA-Z])/g, "∉"],
  [/\\subseteq(?![a-zA-Z])/g, "⊆"],
  [/\\supseteq(?![a-zA-Z])/g, "⊇"],
  [/\\setminus(?![a-zA-Z])/g, "∖"],
  [/\\cup(?![a-zA-Z])/g, "∪"],
  [/\\cap(?![a-zA-Z])/g, "∩"],
  [/\\times(?![a-zA-Z])/g, "×"],
  [/\\cdot(?![a-zA-Z])/g, "·"],
  [/\\(?:dots|ldots|cdots)(?![a-zA-Z])/g, "…"],
  [/\\varphi(?![a-zA-Z])/g, "φ"],
  [/\\phi(?![a-zA-Z])/g, "ϕ"],
  [/\\psi(?![a-zA-Z])/g, "ψ"],
  [/\\alpha(?![a-zA-Z])/g, "α"],
  [/\\beta(?![a-zA-Z])/g, "β"],
  [/\\gamma(?![a-zA-Z])/g, "γ"],
  [/\\delta(?![a-zA-Z])/g, "δ"],
  [/\\epsilon(?![a-zA-Z])/g, "ε"],
  [/\\infty(?![a-zA-Z])/g, "∞"],
  [/\\emptyset(?![a-zA-Z])/g, "∅"],
  [/\\rightarrow(?![a-zA-Z])|\\to(?![a-zA-Z])/g, "→"],
];

function renderTex(src: string): string {
  let out = escapeHtml(src);
  out = out.replace(/\\bar\{([^}]*)\}/g, '<span class="tex-bar">$1</span>');
  out = out.replace(/\\(?:textsc|textsf|mathsf|mathrm|text)\{([^}]*)\}/g, '<span class="tex-upright">$1</span>');
  for (const [pattern, replacement] of TEX_SYMBOLS) {
    out = out.replace(pattern, replacement);
  }
  out = out.replace(/\^\{([^}]*)\}/g, "<sup>$1</sup>");
  out = out.replace(/\^(\S)/g, "<sup>$1</sup>");
  out = out.replace(/_\{([^}]*)\}/g, "<sub>$1</sub>");
  out = out.replace(/_(\S)/g, "<sub>$1</sub>");
  out = out.replace(/[{}]/g, "");
  return out;
}

export function renderMathSpan(src: string, display: boolean): string {
  const cls = display ? "math math-display" : "math math-inline";
  return `<span class="${cls}">${renderTex(src)}</span>`;
}

interface MathSegment {
  placeholder: string;
  html: string;
}

/** Replace $...$ / $$...$$ spans with placeholders; unterminated math is
 * left as literal source wrapped in a warning marker. */
function extractMath(text: string): { text: string; segments: MathSegment[] } {
  const segments: MathSegment[] = [];
  let out = "";
  let i = 0;
  while (i < text.length) {
    const char = text[i];
    if (char !== "$") {
      out += char;
      i += 1;
      continue;
    }
    const display = text.startsWith("$$", i);
    const delim = display ? "$$" : "$";
    const end = text.indexOf(delim, i + delim.length);
    const placeholder = `\u0001M${segments.length}\u0001`;
    if (end < 0) {
      const raw = text.slice(i);
      segments.push({
        placeholder,
        html: `<span class="math-error" title="unterminated math">${escapeHtml(raw)}</span>`,
      });
      out += placeholder;
      break;
    }
    const body = text.slice(i + delim.length, end);
    segments.push({ placeholder, html: renderMathSpan(body, display) });
    out += placeholder;
    i = end + delim.length;
  }
  return { text: out, segments };
}

function renderInline(escaped: string): string {
  let out = escaped;
  out = out.replace(/!\[([^\]]*)\]\(([^)\s]+)\)/g, (match, alt, url) => {
    const safe = sanitizeUrl(url);
    return safe ? `<img src="${safe}" alt="${alt}">` : match;
  });
  out = out.replace(/\[([^\]]+)\]\(([^)\s]+)\)/g, (match, label, url) => {
    const safe = sanitizeUrl(url);
    return safe ? `<a href="${safe}">${label}</a>` : match;
  });
  out = out.replace(/`([^`]+)`/g, "<code>$1</code>");
  out = out.replace(/\*\*([^*]+)\*\*/g, "<strong>$1</strong>");
  out = out.replace(/\*([^*]+)\*/g, "<em>$1</em>");
  return out;
}

/** Markdown-with-TeX to sanitized HTML: paragraphs, lists, sub-headings,
 * inline emphasis/code/links, and math spans. */
export function renderMarkdown(source: string): string {
  if (!source.trim()) return "";
  const { text, segments } = extractMath(source);
  const blocks = text.split(/\n{2,}/);
  const html = blocks
    .map((block) => {
      const trimmed = block.trim();
      if (!trimmed) return "";
      const headingMatch = /^(#{2,6})\s+(.*)$/.exec(trimmed);
      if (headingMatch) {
        const level = headingMatch[1].length;
        return `<h${level}>${renderInline(escapeHtml(headingMatch[2]))}</h${level}>`;
      }
      const lines = trimmed.split("\n");
      if (lines.every((line) => /^\s*[-*]\s+/.test(line))) {
        const items = lines
          .map((line) => `<li>${renderInline(escapeHtml(line.replace(/^\s*[-*]\s+/, "")))}</li>`)
          .join("");
        return `<ul>${items}</ul>`;
      }
      return `<p>${renderInline(escapeHtml(trimmed)).replace(/\n/g, "<br>")}</p>`;
    })
    .filter(Boolean)
    .join("\n");
  let restored = html;
  for (const segment of segments) {
    restored = restored.replace(segment.placeholder, segment.html);
  }
  return restored;
}

// -- BibTeX --

export interface BibEntry {
  type: string;
  key: string;
  fields: Record<string, string>;
}

function readBalanced(text: string, start: number): { value: string; end: number } | null {
  // start points at "{"
  let depth = 0;
  for (let i = start; i < text.length; i++) {
    if (text[i] === "{") depth += 1;
    else if (text[i] === "}") {
      depth -= 1;
      if (depth === 0) return { value: text.slice(start + 1, i), end: i + 1 };
    }
  }
  return null;
}

export function parseBibtex(source: string): { entries: BibEntry[]; malformed: string[] } {
  const entries: BibEntry[] = [];
  const malformed: string[] = [];
  const entryStart = /@([a-zA-Z]+)\s*\{/g;
  let match: RegExpExecArray | null;
  while ((match = entryStart.exec(source)) !== null) {
    const body = readBalanced(source, match.index + match[0].length - 1);
    if (!body) {
      malformed.push(source.slice(match.index).trim());
      break;
    }
    entryStart.lastIndex = body.end;
    const entry = parseEntryBody(match[1].toLowerCase(), body.value);
    if (entry) entries.push(entry);
    else malformed.push(source.slice(match.index, body.end).trim());
  }
  return { entries, malformed };
}

function parseEntryBody(type: string, body: string): BibEntry | null {
  const comma = body.indexOf(",");
  if (comma < 0) return null;
  const key = body.slice(0, comma).trim();
  if (!key) return null;
  const fields: Record<string, string> = {};
  let rest = body.slice(comma + 1);
  const fieldStart = /\s*([a-zA-Z-]+)\s*=\s*/;
  while (rest.trim()) {
    const head = fieldStart.exec(rest);
    if (!head || head.index !== 0) return null;
    const name = head[1].toLowerCase();
    let after = rest.slice(head[0].length);
    let value: string;
    if (after.startsWith("{")) {
      const balanced = readBalanced(after, 0);
      if (!balanced) return null;
      value = balanced.value;
      after = after.slice(balanced.end);
    } else if (after.startsWith('"')) {
      const close = after.indexOf('"', 1);
      if (close < 0) return null;
      value = after.slice(1, close);
      after = after.slice(close + 1);
    } else {
      const close = after.search(/[,\n]/);
      value = (close < 0 ? after : after.slice(0, close)).trim();
      after = close < 0 ? "" : after.slice(close);
    }
    fields[name] = value.replace(/[{}]/g, "").replace(/\s+/g, " ").trim();
    after = after.replace(/^\s*,/, "");
    rest = after;
  }
  return { type, key, fields };
}

function formatAuthors(raw: string): string {
  return raw
    .split(/\s+and\s+/)
    .map((author) => {
      const parts = author.split(",").map((p) => p.trim());
      return parts.length === 2 ? `${parts[1]} ${parts[0]}` : author.trim();
    })
    .join(", ");
}

/** BibTeX to a formatted <ol> reference list; malformed entries are listed raw. */
export function renderBibtex(source: string): string {
  if (!source.trim()) return "";
  const { entries, malformed } = parseBibtex(source);
  const items: string[] = [];
  for (const entry of entries) {
    const parts: string[] = [];
    if (entry.fields.author) {
      parts.push(`<span class="ref-authors">${escapeHtml(formatAuthors(entry.fields.author))}</span>`);
    }
    if (entry.fields.title) {
      parts.push(`<span class="ref-title">${escapeHtml(entry.fields.title)}</span>`);
    }
    const venue = entry.fields.journal ?? entry.fields.booktitle ?? entry.fields.publisher;
    if (venue) {
      parts.push(`<em class="ref-venue">${escapeHtml(venue)}</em>`);
    }
    if (entry.fields.year) {
      parts.push(`<span class="ref-year">${escapeHtml(entry.fields.year)}</span>`);
    }
    items.push(`<li class="ref-entry">${parts.join(". ")}.</li>`);
  }
  for (const raw of malformed) {
    items.push(`<li class="ref-raw"><code>${escapeHtml(raw)}</code></li>`);
  }
  return items.length ? `<ol class="references">${items.join("")}</ol>` : "";
}
