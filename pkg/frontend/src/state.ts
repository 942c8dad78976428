// Session state: annotator identity, queue position, and the
// all/unlabeled filter. Pure data logic, no DOM.

import type { QueueFilter, ReviewCard } from "./types.js";

export class SessionState {
  annotatorName = "";
  filter: QueueFilter = "all";
  private position = 0;
  private queue: ReviewCard[] = [];

  setQueue(cards: ReviewCard[]): void {
    this.queue = cards;
    this.position = Math.min(this.position, Math.max(0, cards.length - 1));
  }

  get cards(): readonly ReviewCard[] {
    return this.queue;
  }

  get queuePosition(): number {
    return this.position;
  }

  get size(): number {
    return this.queue.length;
  }

  current(): ReviewCard | null {
    return this.queue[this.position] ?? null;
  }

  advance(): boolean {
    if (this.position + 1 < this.queue.length) {
      this.position += 1;
      return true;
    }
    return false;
  }

  back(): boolean {
    if (this.position > 0) {
      this.position -= 1;
      return true;
    }
    return false;
  }

  jumpTo(index: number): void {
    if (index < 0 || index >= Math.max(1, this.queue.length)) {
      throw new RangeError(`queue position ${index} out of bounds`);
    }
    this.position = index;
  }

  markCurrent(label: "P" | "N"): void {
    const card = this.current();
    if (card) {
      card.existing_label = label;
    }
  }
}
