// Application wiring: queue navigation, label submission, live metrics.

import { ApiError, ReviewApi } from "./api.js";
import { attachShortcuts } from "./keyboard.js";
import { renderMetrics } from "./metrics.js";
import { SessionState } from "./state.js";
import type { Label, MetricsPayload } from "./types.js";

export class App {
  readonly session = new SessionState();
  private lastMetrics: MetricsPayload | null = null;
  private busy: Promise<void> = Promise.resolve();
  private detach: (() => void) | null = null;

  private banner!: HTMLElement;
  private cardArea!: HTMLElement;
  private message!: HTMLElement;
  private metricsPanel!: HTMLElement;
  private progress!: HTMLElement;
  private annotatorInput!: HTMLInputElement;
  private filterButton!: HTMLButtonElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ReviewApi,
    private readonly doc: Document = document,
  ) {}

  async init(): Promise<void> {
    this.buildSkeleton();
    this.detach = attachShortcuts(this.doc, {
      labelPositive: () => this.enqueueSubmit("P"),
      labelNegative: () => this.enqueueSubmit("N"),
      next: () => {
        this.session.advance();
        this.renderCard();
      },
      previous: () => {
        this.session.back();
        this.renderCard();
      },
      toggleFilter: () => void this.toggleFilter(),
    });
    try {
      const stored = this.doc.defaultView?.localStorage?.getItem("annotator");
      if (stored) {
        this.session.annotatorName = stored;
        this.annotatorInput.value = stored;
      }
    } catch {
      // storage may be unavailable; the input still works
    }
    await this.reloadQueue();
    await this.refreshMetrics();
  }

  dispose(): void {
    this.detach?.();
  }

  /** Settles once every queued submission and refresh has finished. */
  whenIdle(): Promise<void> {
    return this.busy;
  }

  private buildSkeleton(): void {
    this.root.innerHTML = `
      <header>
        <h1>Summary review</h1>
        <label>annotator
          <input id="annotator" type="text" placeholder="your name" autocomplete="off" />
        </label>
        <button id="filter" type="button" title="shortcut: u"></button>
        <span id="progress"></span>
      </header>
      <div id="banner" class="banner" hidden></div>
      <main>
        <section id="card" class="card"></section>
        <aside id="metrics" class="metrics"></aside>
      </main>
      <div id="message" class="message" aria-live="polite"></div>
      <footer>keys: <kbd>P</kbd> correct, <kbd>N</kbd> could be better,
        <kbd>&larr;</kbd>/<kbd>&rarr;</kbd> move, <kbd>U</kbd> unlabeled only</footer>
    `;
    this.banner = this.root.querySelector("#banner")!;
    this.cardArea = this.root.querySelector("#card")!;
    this.message = this.root.querySelector("#message")!;
    this.metricsPanel = this.root.querySelector("#metrics")!;
    this.progress = this.root.querySelector("#progress")!;
    this.annotatorInput = this.root.querySelector("#annotator")!;
    this.filterButton = this.root.querySelector("#filter")!;
    this.annotatorInput.addEventListener("input", () => {
      this.session.annotatorName = this.annotatorInput.value.trim();
      try {
        this.doc.defaultView?.localStorage?.setItem("annotator", this.session.annotatorName);
      } catch {
        // ignore storage failures
      }
    });
    this.filterButton.addEventListener("click", () => void this.toggleFilter());
    this.renderFilterButton();
  }

  private renderFilterButton(): void {
    this.filterButton.textContent =
      this.session.filter === "all" ? "showing: all" : "showing: unlabeled";
  }

  async reloadQueue(): Promise<void> {
    this.banner.hidden = true;
    let cards;
    try {
      cards = await this.api.fetchQueue(this.session.filter);
    } catch (err) {
      this.showBanner(`Cannot reach the review service (${(err as Error).message}).`);
      return;
    }
    this.session.setQueue(cards);
    this.renderCard();
  }

  private showBanner(text: string): void {
    this.banner.hidden = false;
    this.banner.innerHTML = "";
    this.banner.appendChild(this.doc.createTextNode(text + " "));
    const retry = this.doc.createElement("button");
    retry.type = "button";
    retry.textContent = "retry";
    retry.addEventListener("click", () => void this.reloadQueue());
    this.banner.appendChild(retry);
  }

  private async toggleFilter(): Promise<void> {
    this.session.filter = this.session.filter === "all" ? "unlabeled" : "all";
    this.renderFilterButton();
    await this.reloadQueue();
  }

  renderCard(): void {
    const card = this.session.current();
    this.progress.textContent = this.session.size
      ? `${this.session.queuePosition + 1} / ${this.session.size}`
      : "0 / 0";
    this.cardArea.innerHTML = "";
    if (!card) {
      const done = this.doc.createElement("p");
      done.className = "empty-state";
      done.textContent =
        this.session.filter === "unlabeled"
          ? "Nothing left to label - switch to 'all' to revisit."
          : "Queue is empty.";
      this.cardArea.appendChild(done);
      return;
    }
    const fields: Array<[string, string | null, string]> = [
      ["source post", card.source_text, "source"],
      ["final summary", card.final_summary, "summary"],
      ["reference summary", card.reference_summary, "reference"],
    ];
    for (const [title, value, css] of fields) {
      if (value === null) {
        continue;
      }
      const heading = this.doc.createElement("h2");
      heading.textContent = title;
      const body = this.doc.createElement("p");
      body.className = css;
      body.textContent = value;
      this.cardArea.append(heading, body);
    }
    const badge = this.doc.createElement("div");
    badge.className = "label-badge";
    badge.dataset.label = card.existing_label ?? "";
    badge.textContent = card.existing_label
      ? `current label: ${card.existing_label}`
      : "not labeled yet";
    this.cardArea.appendChild(badge);
    const actions = this.doc.createElement("div");
    actions.className = "actions";
    for (const label of ["P", "N"] as const) {
      const button = this.doc.createElement("button");
      button.type = "button";
      button.textContent = label === "P" ? "P - correct" : "N - could be better";
      button.addEventListener("click", () => this.enqueueSubmit(label));
      actions.appendChild(button);
    }
    this.cardArea.appendChild(actions);
  }

  enqueueSubmit(label: Label): void {
    this.busy = this.busy.then(() => this.submitCurrent(label));
  }

  private async submitCurrent(label: Label): Promise<void> {
    const card = this.session.current();
    if (!card) {
      return;
    }
    if (!this.session.annotatorName) {
      this.message.textContent = "Enter your annotator name first.";
      this.annotatorInput.focus();
      return;
    }
    this.message.textContent = "";
    try {
      await this.api.submitLabel(card.post_id, label, this.session.annotatorName);
    } catch (err) {
      if (err instanceof ApiError && err.status !== null) {
        this.message.textContent = `Rejected: ${err.message}`;
      } else {
        this.message.textContent = `Submission failed (${(err as Error).message}); press ${label} to retry.`;
      }
      return;
    }
    this.session.markCurrent(label);
    if (this.session.filter === "unlabeled") {
      await this.reloadQueue();
    } else {
      this.session.advance();
      this.renderCard();
    }
    await this.refreshMetrics();
  }

  async refreshMetrics(): Promise<void> {
    try {
      this.lastMetrics = await this.api.fetchMetrics();
      renderMetrics(this.metricsPanel, this.lastMetrics, false);
    } catch {
      renderMetrics(this.metricsPanel, this.lastMetrics, true);
    }
  }
}
