/** Spawns the Python game service for end-to-end tests. */

import { spawn, type ChildProcess } from "node:child_process";

export interface TestServer {
  baseUrl: string;
  stop(): Promise<void>;
}

export async function startServer(): Promise<TestServer> {
  const port = 8900 + Math.floor(Math.random() * 500);
  const baseUrl = `http://127.0.0.1:${port}`;
  const proc: ChildProcess = spawn(
    "pizzagames",
    ["serve", "--port", String(port), "--host", "127.0.0.1"],
    { stdio: "ignore" },
  );
  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      const res = await fetch(`${baseUrl}/api/v1/games`);
      if (res.ok) break;
    } catch {
      /* not up yet */
    }
    if (proc.exitCode !== null || Date.now() > deadline) {
      proc.kill();
      throw new Error("game service failed to start");
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  return {
    baseUrl,
    stop: () =>
      new Promise<void>((resolve) => {
        proc.once("exit", () => resolve());
        proc.kill();
      }),
  };
}
