/** Pure HTML renderers; the DOM layer only assigns innerHTML from these. */

import type { ChatMessage, PathStep, RccMember, RccResult } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function sortMembers(members: RccMember[]): RccMember[] {
  return [...members].sort((a, b) => {
    const da = a.distance ?? Number.MAX_SAFE_INTEGER;
    const db = b.distance ?? Number.MAX_SAFE_INTEGER;
    if (da !== db) return da - db;
    return a.atom < b.atom ? -1 : a.atom > b.atom ? 1 : 0;
  });
}

export function renderMessages(messages: ChatMessage[]): string {
  return messages
    .map((m) => {
      const body = escapeHtml(m.text);
      return `<div class="message ${m.role}"><span class="who">${m.role}</span> ${body}</div>`;
    })
    .join("\n");
}

export function renderRccPanel(rcc: RccResult | null, chosen: string | null): string {
  if (rcc === null) {
    return '<p class="placeholder">No neighborhood yet.</p>';
  }
  const rows = sortMembers(rcc.members).map((m) => {
    const classes = ["member"];
    if (m.atom === chosen) classes.push("chosen");
    if (!m.value) classes.push("negative");
    const label = m.value ? m.atom : `not ${m.atom}`;
    const distance = m.distance === null ? "&infin;" : String(m.distance);
    return (
      `<tr class="${classes.join(" ")}" data-atom="${escapeHtml(m.atom)}">` +
      `<td>${escapeHtml(label)}</td><td>${distance}</td></tr>`
    );
  });
  if (rows.length <= 1) {
    return (
      `<p class="radius">radius ${rcc.radius ?? "unlimited"}</p>` +
      '<p class="placeholder">Nothing nearby at this radius.</p>'
    );
  }
  return (
    `<p class="radius">radius ${rcc.radius ?? "unlimited"} &middot; ` +
    `${rows.length} members</p>` +
    `<table><thead><tr><th>atom</th><th>distance</th></tr></thead>` +
    `<tbody>${rows.join("")}</tbody></table>`
  );
}

export function renderPath(path: PathStep[], visible: boolean): string {
  if (!visible) {
    return '<p class="placeholder">Explanation hidden.</p>';
  }
  if (path.length === 0) {
    return '<p class="placeholder">No connection to show.</p>';
  }
  const clauses = path.map((step) => {
    const arrow = step.sign === "negative" ? "&#8866;not" : "&#8594;";
    return (
      `<li>rule ${step.rule}: ${escapeHtml(step.from)} ${arrow} ` +
      `${escapeHtml(step.to)}</li>`
    );
  });
  return `<ol class="path">${clauses.join("")}</ol>`;
}

export function memberCount(rcc: RccResult | null): number {
  return rcc === null ? 0 : rcc.members.length;
}
