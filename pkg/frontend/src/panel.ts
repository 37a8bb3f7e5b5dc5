// Drill-down panel: the verbatim utterances behind a statement node, with
// commenter and comment provenance. DOM-only; data comes from
// /statements/{key}.

import type { StatementDetail } from "./types";

export function renderStatementPanel(
  container: HTMLElement,
  key: string,
  detail: StatementDetail,
): void {
  container.replaceChildren();
  container.classList.remove("hidden");

  const heading = document.createElement("h2");
  heading.textContent = detail.displayText;
  container.appendChild(heading);

  const lemmas = document.createElement("p");
  lemmas.className = "lemmas";
  lemmas.textContent = `lemmas: ${detail.lemmas.join(", ")}`;
  container.appendChild(lemmas);

  const count = document.createElement("p");
  count.className = "count";
  count.textContent =
    detail.relations.length === 1
      ? "1 contributing utterance"
      : `${detail.relations.length} contributing utterances`;
  container.appendChild(count);

  const list = document.createElement("ul");
  list.className = "utterances";
  for (const relation of detail.relations) {
    const item = document.createElement("li");
    const quote = document.createElement("blockquote");
    quote.textContent = relation.utterance;
    const source = document.createElement("cite");
    source.textContent =
      `commenter ${relation.commenterId}, comment ${relation.commentId}`;
    item.appendChild(quote);
    item.appendChild(source);
    list.appendChild(item);
  }
  container.appendChild(list);
  container.dataset.statementKey = key;
}

/** 404 after a snapshot swap: the node no longer exists server-side. */
export function renderStaleNotice(container: HTMLElement): void {
  container.replaceChildren();
  container.classList.remove("hidden");
  const notice = document.createElement("p");
  notice.className = "stale-notice";
  notice.textContent =
    "This statement is no longer in the served snapshot. " +
    "Refresh the view to continue exploring.";
  container.appendChild(notice);
}

export function renderErrorPanel(
  container: HTMLElement,
  message: string,
): void {
  container.replaceChildren();
  container.classList.remove("hidden");
  const notice = document.createElement("p");
  notice.className = "error-notice";
  notice.textContent = message;
  container.appendChild(notice);
}

export function renderEmptyNotice(container: HTMLElement): void {
  container.replaceChildren();
  container.classList.remove("hidden");
  const notice = document.createElement("p");
  notice.className = "empty-notice";
  notice.textContent = "No data for this view.";
  container.appendChild(notice);
}

export function hidePanel(container: HTMLElement): void {
  container.replaceChildren();
  container.classList.add("hidden");
}
