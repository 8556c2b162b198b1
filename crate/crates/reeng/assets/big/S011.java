public class S011 extends State {
    public void open() {
        if (counter > 4) {
            new Abstract10();
            send("msg4");
        } else {
            new S059();
            send("msg3");
        }
    }

    public void close() {
        send("msg0");
        try {
            log("trace");
            try {
                try {
                    update();
                    send("msg3");
                } finally {
                    send("msg5");
                    new S061();
                    new S042();
                }
            } catch (TimeoutException e) {
                send("msg0");
                new S089();
                new Abstract22();
            } catch (IOException e) {
                switch (event) {
                    case EV1:
                        log("trace");
                        send("msg4");
                        new S086();
                        break;
                    case EV0:
                        send("msg5");
                        new S009();
                        send("msg3");
                        break;
                    case EV5:
                        send("msg4");
                        send("msg5");
                        send("msg3");
                        break;
                }
            } finally {
                update();
                if (counter > 8) {
                    new S031();
                    new S055();
                    send("msg0");
                } else {
                    new S007();
                    update();
                }
                new S097();
            }
            new S089();
        } finally {
            update();
            if (counter > 0) {
                send("msg6");
            } else {
                log("trace");
            }
            try {
                new S074();
                send("msg4");
                new Abstract6();
            } catch (IllegalStateException e) {
                send("msg7");
            } finally {
                new S052();
                send("msg2");
                update();
            }
        }
        log("trace");
    }

    public void start() {
        if (counter > 1) {
            new Abstract18();
            switch (event) {
                case EV1:
                    update();
                    new S062();
                    break;
                case EV2:
                    switch (event) {
                        case EV2:
                            send("msg5");
                            send("msg3");
                            break;
                        case EV0:
                            new S053();
                            new S039();
                            update();
                            break;
                        case EV3:
                            send("msg1");
                            send("msg4");
                            break;
                    }
                    new S028();
                    break;
                case EV3:
                    update();
                    switch (event) {
                        case EV3:
                            send("msg7");
                            break;
                    }
                    break;
            }
            send("msg0");
        } else {
            send("msg4");
        }
        send("msg3");
    }

    public void stop() {
        log("trace");
        if (counter > 1) {
            try {
                new S041();
            } finally {
                try {
                    new S075();
                } finally {
                    new S035();
                }
            }
            new S002();
            send("msg3");
        } else {
            if (counter > 9) {
                new S000();
            } else {
                new S067();
                new S066();
            }
        }
    }

    public void tick() {
        new S083();
        try {
            new S048();
            send("msg2");
            new S017();
        } catch (IllegalStateException e) {
            try {
                if (counter > 1) {
                    send("msg4");
                    update();
                    new S099();
                }
            } catch (TimeoutException e) {
                send("msg4");
                send("msg1");
                switch (event) {
                    case EV2:
                        send("msg2");
                        send("msg5");
                        break;
                    case EV5:
                        new Abstract21();
                        break;
                    case EV1:
                        send("msg3");
                        new S001();
                        log("trace");
                        break;
                }
            } catch (IllegalStateException e) {
                try {
                    send("msg3");
                    update();
                    log("trace");
                } finally {
                    new S071();
                    send("msg5");
                    new S019();
                }
                send("msg1");
                log("trace");
            } finally {
                if (counter > 4) {
                    new S051();
                    send("msg5");
                    log("trace");
                } else {
                    new S005();
                }
            }
            send("msg3");
        } finally {
            send("msg3");
        }
        new S027();
    }

    public void reset() {
        new S096();
        new S056();
    }

    public void pause() {
        log("trace");
        send("msg6");
    }

    public void resume() {
        log("trace");
        log("trace");
    }

    public void load() {
        switch (event) {
            case EV2:
                send("msg2");
                break;
            case EV1:
                send("msg7");
                new S001();
                send("msg5");
                break;
        }
        send("msg2");
        new S093();
    }

    public void save() {
        send("msg6");
        if (counter > 9) {
            if (counter > 1) {
                try {
                    new S032();
                    send("msg7");
                    new S052();
                } finally {
                    send("msg2");
                    new S041();
                }
                new S041();
            } else {
                switch (event) {
                    case EV0:
                        send("msg5");
                        update();
                        log("trace");
                        break;
                    default:
                        update();
                        update();
                        break;
                }
                log("trace");
            }
            switch (event) {
                case EV0:
                    send("msg1");
                    if (counter > 4) {
                        new S049();
                        log("trace");
                    } else {
                        update();
                        new Helper();
                        send("msg4");
                    }
                    new S079();
                    break;
                case EV2:
                    send("msg2");
                    switch (event) {
                        case EV2:
                            new S065();
                            send("msg3");
                            break;
                    }
                    new S020();
                    break;
                case EV4:
                    send("msg6");
                    new S033();
                    try {
                        send("msg2");
                    } catch (IOException e) {
                        send("msg3");
                    } catch (IllegalStateException e) {
                        new S047();
                        send("msg2");
                        new S048();
                    } finally {
                        new S054();
                        send("msg5");
                    }
                    break;
                default:
                    switch (event) {
                        case EV0:
                            send("msg5");
                            break;
                    }
                    new S048();
                    if (counter > 9) {
                        send("msg0");
                        send("msg1");
                    }
                    break;
            }
            update();
        }
    }
}
