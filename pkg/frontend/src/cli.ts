/**
 * Figure renderer CLI: `render <kind> <in.csv> <out.svg>`.
 *
 * Exit codes: 0 on success, 1 on schema/IO errors (diagnostic on stderr),
 * 2 on usage errors.
 */

import { pathToFileURL } from "node:url";

import { renderFigure } from "./render.js";
import { FIGURE_KINDS, SchemaError, isFigureKind } from "./schemas.js";

const USAGE = `usage: render <kind> <in.csv> <out.svg>
  kind: ${FIGURE_KINDS.join(" | ")}`;

export function main(argv: string[]): number {
  if (argv.length !== 3) {
    console.error(USAGE);
    return 2;
  }
  const [kind, csvPath, outPath] = argv;
  if (!isFigureKind(kind)) {
    console.error(`unknown figure kind '${kind}'\n${USAGE}`);
    return 2;
  }
  try {
    renderFigure(kind, csvPath, outPath);
  } catch (err) {
    if (err instanceof SchemaError || (err as NodeJS.ErrnoException).code === "ENOENT") {
      console.error(`render: ${(err as Error).message}`);
      return 1;
    }
    throw err;
  }
  return 0;
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exit(main(process.argv.slice(2)));
}
