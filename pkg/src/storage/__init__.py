# Report storage
