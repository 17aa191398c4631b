#!/usr/bin/env python3
"""Reference generator for the committed golden PPM.

Produces gradient8_r2_l20_zero.ppm: an 8x8 gradient test image run through
a naive double-loop oil-paint filter (radius 2, 20 intensity levels,
zero-filled border). Kept deliberately independent of the C++ code so the
golden bytes can be regenerated without building anything.
"""

import os


def gradient(w, h):
    img = []
    for y in range(h):
        for x in range(w):
            r = (x * 255) // (w - 1 if w > 1 else 1)
            g = (y * 255) // (h - 1 if h > 1 else 1)
            b = ((x + y) * 255) // (w + h - 2 if w + h > 2 else 1)
            img.append((r, g, b))
    return img


def oil_paint(img, w, h, levels, radius):
    out = [(0, 0, 0)] * (w * h)
    for y in range(radius, h - radius):
        for x in range(radius, w - radius):
            counts = [0] * (levels + 1)
            sum_r = [0] * (levels + 1)
            sum_g = [0] * (levels + 1)
            sum_b = [0] * (levels + 1)
            for dy in range(-radius, radius + 1):
                for dx in range(-radius, radius + 1):
                    r, g, b = img[(y + dy) * w + (x + dx)]
                    # value-quantized luminance class, truncated like a C
                    # int assignment
                    intensity = int(((r + g + b) * levels / 3.0) / 255)
                    counts[intensity] += 1
                    sum_r[intensity] += r
                    sum_g[intensity] += g
                    sum_b[intensity] += b
            max_index = 0
            cur_max = counts[0]
            for i in range(levels + 1):
                if counts[i] > cur_max:
                    cur_max = counts[i]
                    max_index = i
            out[y * w + x] = (sum_r[max_index] // cur_max,
                              sum_g[max_index] // cur_max,
                              sum_b[max_index] // cur_max)
    return out


def write_ppm(path, img, w, h):
    with open(path, "wb") as f:
        f.write(b"P6\n%d %d\n255\n" % (w, h))
        f.write(bytes(c for px in img for c in px))


def main():
    w = h = 8
    filtered = oil_paint(gradient(w, h), w, h, levels=20, radius=2)
    out = os.path.join(os.path.dirname(__file__), "gradient8_r2_l20_zero.ppm")
    write_ppm(out, filtered, w, h)
    print("wrote", out)


if __name__ == "__main__":
    main()
