// Keyboard-first review loop: P/N label, arrows navigate, U toggles the
// unlabeled filter. Shortcuts stay away from form fields and modifier
// combinations so typing an annotator name never fires a label.

export interface ShortcutActions {
  labelPositive(): void;
  labelNegative(): void;
  next(): void;
  previous(): void;
  toggleFilter(): void;
}

export function shouldIgnore(event: KeyboardEvent): boolean {
  if (event.metaKey || event.ctrlKey || event.altKey) {
    return true;
  }
  const target = event.target as HTMLElement | null;
  if (!target) {
    return false;
  }
  const tag = target.tagName;
  if (tag === "INPUT" || tag === "SELECT" || tag === "TEXTAREA") {
    return true;
  }
  return Boolean(target.isContentEditable);
}

export function attachShortcuts(doc: Document, actions: ShortcutActions): () => void {
  const handler = (event: KeyboardEvent) => {
    if (shouldIgnore(event)) {
      return;
    }
    switch (event.key.toLowerCase()) {
      case "p":
        actions.labelPositive();
        break;
      case "n":
        actions.labelNegative();
        break;
      case "arrowright":
      case "j":
        actions.next();
        break;
      case "arrowleft":
      case "k":
        actions.previous();
        break;
      case "u":
        actions.toggleFilter();
        break;
      default:
        return;
    }
    event.preventDefault();
  };
  doc.addEventListener("keydown", handler);
  return () => doc.removeEventListener("keydown", handler);
}
