#!/usr/bin/env python3
"""Builds the 256x256 PGM/PPM test corpus under tests/data/.

Sources:
  lena, baboon-image, cameraman  npm packages (unpacked with `npm pack` + tar)
  moon, astronaut                scikit-image bundled data

Usage: make_test_corpus.py <dir containing the unpacked npm packages> <out dir>
"""
import base64
import pathlib
import re
import sys

import numpy as np
from PIL import Image
from skimage import data

SIZE = (256, 256)


def lena(root: pathlib.Path) -> Image.Image:
    src = (root / "lena-1.0.0/package/lena.js").read_text()
    blob = re.search(r"base64decode\(\s*'([^']+)'", src).group(1)
    px = np.frombuffer(base64.b64decode(blob), np.uint8).reshape(512, 512, 3)
    return Image.fromarray(px)


def main() -> None:
    root, out = pathlib.Path(sys.argv[1]), pathlib.Path(sys.argv[2])
    out.mkdir(parents=True, exist_ok=True)
    shrink = lambda im: im.resize(SIZE, Image.BICUBIC)

    gray = {
        "lena": shrink(lena(root).convert("L")),
        "cameraman": Image.open(root / "cameraman-1.0.0/package/cameraman.png").convert("L"),
        "baboon_gray": shrink(Image.open(root / "baboon-image-2.1.0/package/baboon.png").convert("L")),
        "moon": shrink(Image.fromarray(data.moon())),
    }
    color = {
        "baboon": shrink(Image.open(root / "baboon-image-2.1.0/package/baboon.png").convert("RGB")),
        "astronaut": shrink(Image.fromarray(data.astronaut()).convert("RGB")),
    }
    for name, im in gray.items():
        assert im.size == SIZE
        im.save(out / f"{name}.pgm")
    for name, im in color.items():
        assert im.size == SIZE
        im.save(out / f"{name}.ppm")


if __name__ == "__main__":
    main()
