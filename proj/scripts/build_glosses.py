#!/usr/bin/env python3
"""Build data/glosses.tsv from WordNet 3.0.

Starting from the seed words, every word token of every stored gloss is
looked up in turn (first synset returned by an NLTK-style ``synsets()`` call,
which applies WordNet's morphological normalisation), until the lexicon is
closed: each gloss token either has its own entry or has no WordNet synset at
all. Tokens are produced with the same rules as the C++ tokenizer: split on
whitespace, strip leading/trailing punctuation, drop punctuation-only chunks.

Requires the ``wn==0.0.23`` package, which bundles the WordNet 3.0 database.

    python3 scripts/build_glosses.py > data/glosses.tsv
"""
import string
import sys

from wn import WordNet

SEEDS = ["bird", "generalization", "hand", "hasty", "indeed", "passion"]
PUNCT = set(string.punctuation)


def tokens(text):
    out = []
    for chunk in text.split():
        start, end = 0, len(chunk)
        while start < end and chunk[start] in PUNCT:
            start += 1
        while end > start and chunk[end - 1] in PUNCT:
            end -= 1
        if start < end:
            out.append(chunk[start:end])
    return out


def main():
    wordnet = WordNet()
    entries = {}
    missing = set()
    pending = list(SEEDS)
    while pending:
        word = pending.pop().lower()
        if word in entries or word in missing:
            continue
        synsets = wordnet.synsets(word)
        gloss = synsets[0].definition().strip() if synsets else ""
        words = tokens(gloss)
        if not words:
            missing.add(word)
            continue
        entries[word] = " ".join(gloss.split())
        pending.extend(words)
    for word in sorted(entries):
        sys.stdout.write(f"{word}\t{entries[word]}\n")
    sys.stderr.write(f"{len(entries)} entries, {len(missing)} tokens without a gloss\n")


if __name__ == "__main__":
    main()
