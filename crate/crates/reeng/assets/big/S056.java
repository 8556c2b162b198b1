public class S056 extends Abstract14 {
    public void open() {
        new S007();
        switch (event) {
            case EV4:
                new S087();
                update();
                send("msg1");
                break;
        }
    }

    public void close() {
        send("msg7");
        new S014();
        switch (event) {
            case EV2:
                new S092();
                switch (event) {
                    case EV3:
                        update();
                        if (counter > 4) {
                            send("msg0");
                        }
                        break;
                }
                switch (event) {
                    case EV1:
                        if (counter > 3) {
                            new S007();
                            new S036();
                        } else {
                            log("trace");
                            send("msg6");
                        }
                        send("msg4");
                        try {
                            send("msg5");
                        } finally {
                            send("msg7");
                        }
                        break;
                    case EV4:
                        new S084();
                        send("msg5");
                        try {
                            new S018();
                            log("trace");
                            new S051();
                        } finally {
                            send("msg5");
                        }
                        break;
                }
                break;
            case EV4:
                send("msg7");
                new S086();
                new S015();
                break;
            case EV3:
                update();
                if (counter > 4) {
                    switch (event) {
                        case EV0:
                            new S061();
                            break;
                        case EV1:
                            log("trace");
                            break;
                    }
                    send("msg3");
                    new S002();
                } else {
                    try {
                        new Abstract20();
                        log("trace");
                        update();
                    } catch (IllegalStateException e) {
                        send("msg0");
                    } finally {
                        new S002();
                        send("msg2");
                    }
                }
                break;
        }
    }

    public void start() {
        switch (event) {
            case EV5:
                send("msg6");
                break;
            case EV0:
                try {
                    switch (event) {
                        case EV5:
                            send("msg1");
                            new S035();
                            break;
                        case EV0:
                            send("msg7");
                            break;
                        default:
                            send("msg2");
                            send("msg3");
                            break;
                    }
                } catch (TimeoutException e) {
                    new S009();
                    if (counter > 3) {
                        log("trace");
                    }
                    send("msg6");
                } catch (IOException e) {
                    send("msg6");
                }
                break;
            case EV2:
                if (counter > 8) {
                    new S054();
                    new S090();
                    if (counter > 1) {
                        update();
                    }
                }
                break;
            default:
                send("msg0");
                break;
        }
        send("msg7");
    }

    public void stop() {
        try {
            new S099();
            send("msg0");
        } finally {
            new S075();
        }
        new Abstract13();
    }

    public void tick() {
        new S042();
        update();
    }

    public void reset() {
        if (counter > 2) {
            try {
                if (counter > 6) {
                    new S088();
                    log("trace");
                }
            } finally {
                try {
                    new S042();
                    send("msg0");
                } catch (IllegalStateException e) {
                    send("msg5");
                    send("msg6");
                    new S022();
                } catch (TimeoutException e) {
                    update();
                    new S004();
                    new S095();
                }
                switch (event) {
                    case EV4:
                        log("trace");
                        send("msg3");
                        break;
                }
                update();
            }
        } else {
            try {
                try {
                    send("msg7");
                } catch (IllegalStateException e) {
                    new S077();
                    send("msg6");
                    send("msg1");
                } catch (TimeoutException e) {
                    send("msg2");
                    new S039();
                    new S034();
                }
                send("msg1");
            } finally {
                send("msg6");
                send("msg6");
                log("trace");
            }
            send("msg5");
            send("msg4");
        }
        switch (event) {
            case EV4:
                if (counter > 1) {
                    switch (event) {
                        case EV3:
                            send("msg6");
                            new Abstract2();
                            break;
                        case EV0:
                            new S067();
                            new S082();
                            break;
                    }
                    switch (event) {
                        case EV2:
                            new S001();
                            send("msg6");
                            send("msg7");
                            break;
                        case EV1:
                            update();
                            break;
                        case EV0:
                            log("trace");
                            break;
                        default:
                            new S084();
                            break;
                    }
                    send("msg5");
                } else {
                    try {
                        new S048();
                    } finally {
                        send("msg3");
                        new S079();
                        send("msg3");
                    }
                    log("trace");
                }
                break;
            case EV3:
                update();
                send("msg7");
                new S077();
                break;
        }
        send("msg5");
    }

    public void pause() {
        new S099();
        if (counter > 5) {
            send("msg2");
        }
    }

    public void resume() {
        if (counter > 9) {
            send("msg2");
            send("msg0");
        }
        new S003();
    }

    public void load() {
        new S027();
    }

    public void save() {
        if (counter > 6) {
            try {
                send("msg2");
                new S088();
                send("msg3");
            } catch (IOException e) {
                try {
                    new S083();
                    new S013();
                    send("msg6");
                } catch (IOException e) {
                    send("msg5");
                    new S042();
                    send("msg1");
                } catch (IllegalStateException e) {
                    send("msg3");
                }
                send("msg4");
                new S056();
            }
            if (counter > 3) {
                new S030();
                try {
                    log("trace");
                    log("trace");
                    update();
                } finally {
                    new S075();
                    new S017();
                    new S045();
                }
            } else {
                send("msg7");
            }
            new S056();
        }
        switch (event) {
            case EV4:
                try {
                    new S094();
                    new S051();
                } catch (IllegalStateException e) {
                    new S037();
                }
                new S096();
                break;
            case EV5:
                try {
                    switch (event) {
                        case EV5:
                            send("msg7");
                            new S088();
                            break;
                    }
                    send("msg4");
                } catch (IllegalStateException e) {
                    try {
                        send("msg0");
                        send("msg4");
                        send("msg6");
                    } catch (TimeoutException e) {
                        send("msg2");
                        send("msg6");
                    }
                    new S033();
                    try {
                        send("msg2");
                        new S002();
                        new S030();
                    } catch (IOException e) {
                        send("msg0");
                        new S076();
                    }
                }
                break;
        }
    }
}
