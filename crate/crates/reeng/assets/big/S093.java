public class S093 extends State {
    public void open() {
        send("msg4");
        if (counter > 5) {
            new S020();
            update();
            try {
                send("msg3");
                log("trace");
                new S007();
            } catch (IOException e) {
                new S041();
            }
        } else {
            send("msg1");
            send("msg2");
        }
    }

    public void close() {
        try {
            update();
            try {
                if (counter > 5) {
                    send("msg1");
                    new Abstract14();
                } else {
                    log("trace");
                }
                new S077();
                log("trace");
            } catch (IllegalStateException e) {
                send("msg4");
            }
        } catch (IllegalStateException e) {
            send("msg4");
            send("msg7");
            new S062();
        } catch (IOException e) {
            send("msg5");
            if (counter > 2) {
                try {
                    new S078();
                    send("msg1");
                } finally {
                    new S049();
                    new S099();
                    send("msg6");
                }
                if (counter > 8) {
                    update();
                    log("trace");
                }
            }
            switch (event) {
                case EV0:
                    new S014();
                    send("msg0");
                    if (counter > 1) {
                        log("trace");
                    } else {
                        update();
                    }
                    break;
                case EV3:
                    new S048();
                    if (counter > 3) {
                        send("msg3");
                        new S013();
                    }
                    break;
                case EV1:
                    send("msg3");
                    break;
                default:
                    if (counter > 8) {
                        update();
                        new S090();
                    }
                    send("msg2");
                    new Abstract0();
                    break;
            }
        }
    }

    public void start() {
        log("trace");
        send("msg6");
        log("trace");
    }

    public void stop() {
        send("msg3");
        new Abstract18();
        new S082();
    }

    public void tick() {
        send("msg5");
        log("trace");
        try {
            switch (event) {
                case EV3:
                    try {
                        log("trace");
                    } catch (IllegalStateException e) {
                        send("msg6");
                        send("msg3");
                    } catch (IOException e) {
                        new S035();
                        send("msg7");
                        new S073();
                    } finally {
                        log("trace");
                    }
                    update();
                    send("msg6");
                    break;
                default:
                    new S098();
                    if (counter > 1) {
                        send("msg4");
                        new Abstract21();
                        new S041();
                    } else {
                        new S096();
                        log("trace");
                    }
                    break;
            }
        } finally {
            new S048();
        }
    }

    public void reset() {
        new S036();
        try {
            switch (event) {
                case EV0:
                    update();
                    break;
                case EV1:
                    send("msg5");
                    send("msg3");
                    break;
                case EV4:
                    try {
                        send("msg1");
                        log("trace");
                    } catch (IllegalStateException e) {
                        new S096();
                        send("msg1");
                        send("msg5");
                    } catch (IOException e) {
                        send("msg3");
                        send("msg3");
                    }
                    break;
                default:
                    send("msg1");
                    new S051();
                    break;
            }
        } finally {
            new S069();
        }
    }

    public void pause() {
        if (counter > 6) {
            send("msg1");
            log("trace");
        } else {
            send("msg4");
            send("msg1");
        }
        new S083();
        new S008();
    }

    public void resume() {
        switch (event) {
            case EV2:
                try {
                    if (counter > 6) {
                        new S004();
                    }
                    send("msg5");
                    new S033();
                } catch (TimeoutException e) {
                    try {
                        send("msg3");
                    } finally {
                        log("trace");
                    }
                    if (counter > 6) {
                        log("trace");
                    } else {
                        new S015();
                    }
                } catch (IllegalStateException e) {
                    send("msg1");
                    switch (event) {
                        case EV0:
                            update();
                            break;
                        case EV3:
                            new S091();
                            break;
                        case EV2:
                            log("trace");
                            break;
                    }
                    send("msg2");
                }
                break;
            case EV1:
                log("trace");
                break;
            case EV4:
                send("msg1");
                new S025();
                break;
            default:
                send("msg3");
                break;
        }
        send("msg4");
    }

    public void load() {
        try {
            if (counter > 8) {
                switch (event) {
                    case EV0:
                        send("msg6");
                        new S025();
                        send("msg3");
                        break;
                    case EV5:
                        send("msg4");
                        break;
                }
                switch (event) {
                    case EV5:
                        send("msg1");
                        send("msg7");
                        new S090();
                        break;
                }
                new S027();
            } else {
                update();
                switch (event) {
                    case EV2:
                        send("msg2");
                        new S042();
                        break;
                }
                send("msg6");
            }
            switch (event) {
                case EV0:
                    new S067();
                    break;
            }
        } catch (IOException e) {
            new S009();
            send("msg5");
            new S004();
        } catch (TimeoutException e) {
            send("msg3");
            new S057();
            new S037();
        } finally {
            if (counter > 3) {
                try {
                    new S063();
                    new Abstract17();
                } finally {
                    update();
                }
            }
            switch (event) {
                case EV2:
                    update();
                    break;
                case EV5:
                    switch (event) {
                        case EV1:
                            send("msg5");
                            break;
                    }
                    send("msg4");
                    break;
                case EV0:
                    try {
                        new S053();
                    } finally {
                        log("trace");
                    }
                    break;
            }
        }
        new Abstract4();
        try {
            log("trace");
            switch (event) {
                case EV5:
                    if (counter > 0) {
                        send("msg6");
                        new S087();
                        send("msg1");
                    } else {
                        new S041();
                        new S032();
                        new S035();
                    }
                    break;
                case EV1:
                    log("trace");
                    try {
                        new S005();
                    } finally {
                        new Abstract12();
                        new S024();
                    }
                    try {
                        log("trace");
                        new S067();
                        new S007();
                    } finally {
                        new S066();
                        send("msg3");
                    }
                    break;
            }
        } finally {
            log("trace");
            switch (event) {
                case EV4:
                    new S009();
                    new S084();
                    break;
            }
        }
    }

    public void save() {
        if (counter > 7) {
            update();
            try {
                if (counter > 2) {
                    send("msg3");
                }
                send("msg0");
                log("trace");
            } catch (TimeoutException e) {
                if (counter > 0) {
                    new S069();
                }
                send("msg4");
                send("msg6");
            }
        }
        send("msg3");
        send("msg5");
    }
}
