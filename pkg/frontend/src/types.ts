// Shapes mirrored one-to-one from the review service API.

export type Label = "P" | "N";

export interface ReviewCard {
  post_id: string;
  source_text: string;
  final_summary: string;
  reference_summary: string | null;
  existing_label: Label | null;
}

export interface ConfusionCells {
  tp: number;
  fp: number;
  tn: number;
  fn: number;
  total: number;
}

export interface MetricsPayload {
  accuracy: number;
  precision: number;
  recall: number;
  f_measure: number;
  error_rate: number;
  flags: string[];
  confusion: ConfusionCells;
}

export interface SelectionStatsPayload {
  extractive_count: number;
  abstractive_count: number;
  mean_similarity_by_branch: Record<string, number>;
}

export type QueueFilter = "all" | "unlabeled";
