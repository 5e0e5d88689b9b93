// The musical compass: a radial histogram drawn over the map center,
// with a radar sweep hand and a highlight on the sounding wedge.

export interface CompassGeometry {
  innerRadius: number;
  outerRadius: number;
}

/** Wedge radius grows linearly with the normalized bin value. */
export function wedgeRadius(value: number, geometry: CompassGeometry): number {
  return geometry.innerRadius + value * (geometry.outerRadius - geometry.innerRadius);
}

/** Angular span of wedge i (radians, clockwise from north), bin 0 centered on north. */
export function wedgeSpan(index: number, binCount: number): { from: number; to: number } {
  const width = (2 * Math.PI) / binCount;
  const center = index * width;
  return { from: center - width / 2, to: center + width / 2 };
}

const toCanvasAngle = (clockwiseFromNorth: number): number => clockwiseFromNorth - Math.PI / 2;

export interface CompassStyle {
  wedge: string;
  wedgeHighlight: string;
  ring: string;
  hand: string;
}

export const DEFAULT_STYLE: CompassStyle = {
  wedge: "rgba(32, 120, 220, 0.55)",
  wedgeHighlight: "rgba(255, 160, 40, 0.9)",
  ring: "rgba(255, 255, 255, 0.8)",
  hand: "rgba(255, 80, 60, 0.9)",
};

export function drawCompass(
  ctx: CanvasRenderingContext2D,
  values: number[],
  cx: number,
  cy: number,
  geometry: CompassGeometry,
  highlightedStep: number | null,
  sweepAngleRad: number | null,
  style: CompassStyle = DEFAULT_STYLE,
): void {
  const bins = values.length;

  ctx.save();
  ctx.lineWidth = 1.5;
  ctx.strokeStyle = style.ring;
  ctx.beginPath();
  ctx.arc(cx, cy, geometry.outerRadius, 0, 2 * Math.PI);
  ctx.stroke();
  ctx.beginPath();
  ctx.arc(cx, cy, geometry.innerRadius, 0, 2 * Math.PI);
  ctx.stroke();

  for (let i = 0; i < bins; i++) {
    if (values[i] <= 0) continue; // all-zero histogram renders as a bare ring
    const { from, to } = wedgeSpan(i, bins);
    const radius = wedgeRadius(values[i], geometry);
    ctx.beginPath();
    ctx.moveTo(cx + geometry.innerRadius * Math.cos(toCanvasAngle(from)), cy + geometry.innerRadius * Math.sin(toCanvasAngle(from)));
    ctx.arc(cx, cy, radius, toCanvasAngle(from), toCanvasAngle(to));
    ctx.arc(cx, cy, geometry.innerRadius, toCanvasAngle(to), toCanvasAngle(from), true);
    ctx.closePath();
    ctx.fillStyle = i === highlightedStep ? style.wedgeHighlight : style.wedge;
    ctx.fill();
  }

  if (sweepAngleRad !== null) {
    const angle = toCanvasAngle(sweepAngleRad);
    ctx.strokeStyle = style.hand;
    ctx.lineWidth = 2;
    ctx.beginPath();
    ctx.moveTo(cx, cy);
    ctx.lineTo(cx + geometry.outerRadius * Math.cos(angle), cy + geometry.outerRadius * Math.sin(angle));
    ctx.stroke();
  }

  // north tick so the compass reads as a compass
  ctx.strokeStyle = style.ring;
  ctx.beginPath();
  ctx.moveTo(cx, cy - geometry.outerRadius);
  ctx.lineTo(cx, cy - geometry.outerRadius - 8);
  ctx.stroke();
  ctx.restore();
}
