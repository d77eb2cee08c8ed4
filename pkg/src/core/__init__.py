# Domain logic
