// Thin fetch client for the review service. Every number shown in the
// UI originates from these responses; nothing is derived client-side.

import type { Label, MetricsPayload, QueueFilter, ReviewCard, SelectionStatsPayload } from "./types.js";

export class ApiError extends Error {
  constructor(message: string, readonly status: number | null) {
    super(message);
  }
}

export class ReviewApi {
  constructor(private readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.base + path, init);
    } catch (err) {
      throw new ApiError(`service unreachable: ${String(err)}`, null);
    }
    let body: unknown = null;
    try {
      body = await response.json();
    } catch {
      // non-JSON error bodies fall through with a generic message
    }
    if (!response.ok) {
      const detail =
        body && typeof body === "object" && "detail" in body
          ? String((body as { detail: unknown }).detail)
          : `status ${response.status}`;
      throw new ApiError(detail, response.status);
    }
    return body as T;
  }

  fetchQueue(filter: QueueFilter): Promise<ReviewCard[]> {
    const query = filter === "unlabeled" ? "?unlabeled=true" : "";
    return this.request<ReviewCard[]>(`/api/queue${query}`);
  }

  submitLabel(postId: string, label: Label, annotator: string): Promise<void> {
    return this.request<void>("/api/labels", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ post_id: postId, label, annotator }),
    });
  }

  fetchMetrics(): Promise<MetricsPayload> {
    return this.request<MetricsPayload>("/api/metrics");
  }

  fetchStats(): Promise<SelectionStatsPayload> {
    return this.request<SelectionStatsPayload>("/api/stats");
  }
}
