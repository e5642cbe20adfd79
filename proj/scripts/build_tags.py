#!/usr/bin/env python3
"""Build data/tags.tsv from a Brill-style lexicon (``word TAG [TAG...]``).

The source used for the bundled file is ``en-lexicon.txt`` shipped inside the
textblob wheel (Brill's tagger lexicon, trained on the Brown corpus and the
Penn Treebank). The first tag on each line is the most frequent one; it is
mapped from the Penn Treebank tagset onto the 12-tag universal tagset.

    python3 scripts/build_tags.py en-lexicon.txt > data/tags.tsv
"""
import re
import sys

PTB_TO_UNIVERSAL = {
    "CC": "CONJ", "CD": "NUM", "DT": "DET", "EX": "DET", "FW": "X",
    "IN": "ADP", "JJ": "ADJ", "JJR": "ADJ", "JJS": "ADJ", "LS": "X",
    "MD": "VERB", "NN": "NOUN", "NNP": "NOUN", "NNPS": "NOUN", "NNS": "NOUN",
    "NP": "NOUN", "PDT": "DET", "POS": "PRT", "PRP": "PRON", "PRP$": "PRON",
    "RB": "ADV", "RBR": "ADV", "RBS": "ADV", "RP": "PRT", "SYM": "X",
    "TO": "PRT", "UH": "X", "VB": "VERB", "VBD": "VERB", "VBG": "VERB",
    "VBN": "VERB", "VBP": "VERB", "VBZ": "VERB", "WDT": "DET", "WP": "PRON",
    "WP$": "PRON", "WRB": "ADV",
}

WORD = re.compile(r"^[a-z0-9][a-z0-9'.&-]*$")


def main(path):
    lowercase_seen = {}
    folded = {}
    order = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.startswith(";;;"):
                continue
            parts = line.split()
            if len(parts) < 2:
                continue
            surface, ptb = parts[0], parts[1]
            tag = PTB_TO_UNIVERSAL.get(ptb)
            key = surface.lower()
            if tag is None or not WORD.match(key):
                continue
            if surface == key:
                # A lowercase surface form beats any capitalized variant.
                if key not in lowercase_seen:
                    lowercase_seen[key] = tag
                    if key not in folded:
                        order.append(key)
                    folded[key] = tag
            elif key not in folded:
                folded[key] = tag
                order.append(key)
    out = sys.stdout
    for key in sorted(order):
        out.write(f"{key}\t{folded[key]}\n")


if __name__ == "__main__":
    main(sys.argv[1])
