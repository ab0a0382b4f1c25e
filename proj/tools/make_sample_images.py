#!/usr/bin/env python3
# Copyright 2026 The chaoskey Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the two synthetic 64x64 8-bit greyscale BMPs shipped in data/.

portrait64.bmp  smooth shading with texture, standing in for a photo
moon64.bmp      bright cratered disc on a dark sky

Both carry mild deterministic noise so that no two 16-byte blocks repeat.
"""
import math
import pathlib
import struct

W = H = 64


def lcg(seed):
    state = seed
    while True:
        state = (1103515245 * state + 12345) & 0x7FFFFFFF
        yield state >> 16


def portrait(x, y, noise):
    cx, cy = x - 32, y - 28
    face = 150 * math.exp(-(cx * cx / 300.0 + cy * cy / 500.0))
    shade = 40 + 1.5 * x + 0.8 * y
    texture = 12 * math.sin(x * 0.45) * math.cos(y * 0.3)
    return shade + face + texture + (next(noise) % 9) - 4


def moon(x, y, noise):
    cx, cy = x - 32, y - 32
    r = math.hypot(cx, cy)
    v = 15.0
    if r < 26:
        v = 200 - 2.0 * r
        for (ox, oy, rad) in ((8, -6, 6), (-10, 4, 4), (3, 12, 5), (-6, -12, 3)):
            d = math.hypot(cx - ox, cy - oy)
            if d < rad:
                v -= 60 * (1 - d / rad)
    return v + (next(noise) % 11) - 5


def write_bmp(path, fn, seed):
    noise = lcg(seed)
    rows = []
    for y in range(H):
        rows.append(bytes(max(0, min(255, int(fn(x, y, noise)))) for x in range(W)))
    pixels = b"".join(reversed(rows))  # bottom-up
    palette = b"".join(bytes((i, i, i, 0)) for i in range(256))
    offset = 14 + 40 + len(palette)
    header = b"BM" + struct.pack("<IHHI", offset + len(pixels), 0, 0, offset)
    info = struct.pack("<IiiHHIIiiII", 40, W, H, 1, 8, 0, len(pixels), 2835, 2835, 256, 0)
    pathlib.Path(path).write_bytes(header + info + palette + pixels)


if __name__ == "__main__":
    out = pathlib.Path(__file__).resolve().parent.parent / "data"
    out.mkdir(exist_ok=True)
    write_bmp(out / "portrait64.bmp", portrait, 7)
    write_bmp(out / "moon64.bmp", moon, 11)
