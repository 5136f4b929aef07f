#!/usr/bin/env python3
# Copyright 2026 The dpvqc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds the bundled MNIST 0/1 IDX files from the npm `mnist` package.

The npm package (MIT, Juan Cazala) ships real MNIST digits as JSON arrays of
pixel/255 values rounded to three decimals. Rounding back to bytes recovers the
original pixels.

    npm pack mnist && tar xzf mnist-*.tgz
    python3 tools/make_mnist01_idx.py package/src/digits data/mnist01
"""
import json
import pathlib
import struct
import sys


def main(digits_dir: str, out_dir: str) -> None:
    images = bytearray()
    labels = bytearray()
    for digit in (0, 1):
        flat = json.loads(pathlib.Path(digits_dir, f"{digit}.json").read_text())["data"]
        assert len(flat) % 784 == 0
        images += bytes(max(0, min(255, round(v * 255))) for v in flat)
        labels += bytes([digit]) * (len(flat) // 784)
    count = len(labels)
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "mnist01-images-idx3-ubyte").write_bytes(
        struct.pack(">IIII", 2051, count, 28, 28) + bytes(images))
    (out / "mnist01-labels-idx1-ubyte").write_bytes(
        struct.pack(">II", 2049, count) + bytes(labels))
    print(f"wrote {count} images to {out}")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
