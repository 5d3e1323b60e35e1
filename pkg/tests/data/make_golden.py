"""Regenerate segmentation_golden.json from golden_sentences.txt.

Spans come from the construction (known sentence list joined with known
separators), never from the segmenter under test.
"""

import json
from pathlib import Path

HERE = Path(__file__).parent
SEPARATORS = [" ", "  ", "\n", " \n\t", "\n\n"]


def load_sections(path):
    sections, current = {}, None
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            sections[current] = []
        else:
            sections[current].append(line)
    return sections


def build(sentences):
    text, spans = "  ", []
    for k, sentence in enumerate(sentences):
        start = len(text.encode("utf-8"))
        text += sentence
        spans.append([start, len(text.encode("utf-8"))])
        text += SEPARATORS[k % len(SEPARATORS)]
    return {"text": text, "spans": spans}


def main():
    sections = load_sections(HERE / "golden_sentences.txt")
    golden = {lang: build(sents) for lang, sents in sections.items()}
    out = HERE / "segmentation_golden.json"
    out.write_text(json.dumps(golden, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
