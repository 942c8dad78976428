#!/usr/bin/env python3
"""Regenerate the committed test fixtures (deterministic, seeded).

Writes into tests/fixtures/:
  corpus_tiny.csv / references_tiny.csv   3-row smoke corpus
  corpus_100.csv / references_100.csv     synthetic 100-post corpus
  corpus_886.csv                          886 rows, 66 normalized duplicates
  stopwords_en.txt, lexicon.tsv, abbreviations.txt
"""

from __future__ import annotations

import csv
import random
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

TAGS = [
    "love", "instagood", "fashion", "photooftheday", "beautiful", "art",
    "photography", "happy", "picoftheday", "cute", "follow", "tbt",
    "followme", "nature",
]

WORDS = [
    "sunset", "coffee", "travel", "beach", "morning", "city", "mountain",
    "friends", "smile", "light", "ocean", "forest", "music", "dance",
    "street", "summer", "winter", "golden", "quiet", "crowd", "camera",
    "moment", "journey", "window", "garden", "river", "cloud", "story",
    "color", "shadow", "bridge", "market", "island", "harbor", "evening",
    "walking", "reading", "painting", "cooking", "running", "dream",
    "memory", "weekend", "holiday", "festival", "sunrise", "lantern",
    "meadow", "valley", "horizon",
]

STOPWORDS = """
a an and are as at be but by for from has have i in is it its of on or
our so that the their them they this to was we were will with you your
""".split()

LEXICON_GROUPS = [
    ("sunset", "sunrise", "dusk"),
    ("ocean", "sea"),
    ("photo", "picture", "shot", "camera"),
    ("happy", "glad", "joyful"),
    ("journey", "trip", "travel"),
    ("evening", "night"),
    ("forest", "woods"),
    ("street", "road"),
]

ABBREVIATIONS = ["dr.", "mr.", "mrs.", "ms.", "prof.", "st.", "vs.", "etc.", "e.g.", "i.e."]

NOISE = ["@friend", "$5", "100%", "(wow)", "*new*", "!"]


def write_corpus(path: Path, rows: list[tuple[str, str, str]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "hashtags", "text"])
        writer.writerows(rows)


def write_references(path: Path, rows: list[tuple[str, str]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "summary"])
        writer.writerows(rows)


def make_sentence(rng: random.Random, bank: list[str], length: int, noise: bool) -> str:
    words = [rng.choice(bank) for _ in range(length)]
    words.insert(rng.randrange(len(words)), rng.choice(STOPWORDS))
    if noise:
        words.insert(rng.randrange(len(words)), rng.choice(NOISE))
    return " ".join(words) + rng.choice([".", ".", "?"])


def make_post_text(rng: random.Random, n_sentences: int) -> str:
    bank = rng.sample(WORDS, 10)
    sentences = []
    for i in range(n_sentences):
        sentences.append(make_sentence(rng, bank, rng.randint(4, 8), noise=rng.random() < 0.4))
    return " ".join(sentences)


def corpus_tiny() -> None:
    rows = [
        ("t1", "love", "The golden sunset over the ocean. Waves rolled in slowly."),
        ("t2", "art", "A quiet gallery morning with new paintings on every wall."),
        ("t3", "love|art", "Street art at sunset made the whole crowd smile."),
    ]
    write_corpus(FIXTURES / "corpus_tiny.csv", rows)
    write_references(
        FIXTURES / "references_tiny.csv",
        [
            ("t1", "golden sunset over the ocean"),
            ("t2", "a quiet gallery morning with paintings"),
        ],
    )


def corpus_100() -> None:
    rng = random.Random(20240811)
    rows = []
    refs = []
    for i in range(100):
        post_id = f"p{i:03d}"
        tags = "|".join(sorted(rng.sample(TAGS, rng.randint(1, 3))))
        text = make_post_text(rng, rng.randint(3, 6))
        rows.append((post_id, tags, text))
        if i % 2 == 0:
            # reference close to the post: its own lead sentence, cleaned by hand
            lead = text.split(".")[0].split("?")[0]
            for junk in NOISE:
                lead = lead.replace(junk, " ")
            refs.append((post_id, " ".join(lead.split()).lower()))
        else:
            refs.append((post_id, " ".join(rng.choice(WORDS) for _ in range(6))))
    write_corpus(FIXTURES / "corpus_100.csv", rows)
    write_references(FIXTURES / "references_100.csv", refs)


def corpus_886() -> None:
    rng = random.Random(886820)
    base_texts = []
    for i in range(820):
        w = rng.sample(WORDS, 3)
        base_texts.append(
            f"Post number {i} about {w[0]} and {w[1]} near the {w[2]}."
        )
    rows: list[str] = list(base_texts)
    # 66 duplicates that differ only in case and spacing, inserted after
    # their originals so first occurrences win.
    dup_sources = rng.sample(range(820), 66)
    for source_index in dup_sources:
        original = rows[rows.index(base_texts[source_index])]
        mangled = "".join(
            ch.upper() if rng.random() < 0.3 else ch for ch in original
        ).replace(" ", "  ", 1)
        position = rng.randrange(rows.index(base_texts[source_index]) + 1, len(rows) + 1)
        rows.insert(position, mangled)
    assert len(rows) == 886
    out = []
    for number, text in enumerate(rows, start=1):
        tags = "|".join(sorted(rng.sample(TAGS, rng.randint(1, 2))))
        out.append((f"r{number:04d}", tags, text))
    write_corpus(FIXTURES / "corpus_886.csv", out)


def wordlists() -> None:
    with open(FIXTURES / "stopwords_en.txt", "w", encoding="utf-8") as fh:
        fh.write("# common english stopwords\n")
        for word in STOPWORDS:
            fh.write(word + "\n")
    with open(FIXTURES / "lexicon.tsv", "w", encoding="utf-8") as fh:
        fh.write("# synonym groups, tab-separated\n")
        for group in LEXICON_GROUPS:
            fh.write("\t".join(group) + "\n")
    with open(FIXTURES / "abbreviations.txt", "w", encoding="utf-8") as fh:
        for abbr in ABBREVIATIONS:
            fh.write(abbr + "\n")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    corpus_tiny()
    corpus_100()
    corpus_886()
    wordlists()
    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    main()
