public class S057 extends Abstract12 {
    public void open() {
        send("msg0");
        new S039();
    }

    public void close() {
        new S044();
        switch (event) {
            case EV1:
                new S095();
                send("msg6");
                break;
            case EV0:
                new S093();
                break;
            case EV4:
                switch (event) {
                    case EV2:
                        new S071();
                        break;
                    case EV0:
                        send("msg3");
                        try {
                            send("msg6");
                            log("trace");
                        } catch (TimeoutException e) {
                            send("msg5");
                            send("msg4");
                            send("msg5");
                        } finally {
                            log("trace");
                        }
                        break;
                    default:
                        log("trace");
                        break;
                }
                send("msg5");
                send("msg7");
                break;
            default:
                send("msg0");
                log("trace");
                try {
                    switch (event) {
                        case EV4:
                            new S013();
                            break;
                        case EV3:
                            new S063();
                            new S058();
                            break;
                    }
                    log("trace");
                    send("msg1");
                } catch (TimeoutException e) {
                    if (counter > 1) {
                        new S062();
                        new S065();
                    } else {
                        send("msg2");
                    }
                }
                break;
        }
        log("trace");
    }

    public void start() {
        new S076();
        new S009();
    }

    public void stop() {
        send("msg1");
        log("trace");
    }

    public void tick() {
        log("trace");
        new S008();
        try {
            log("trace");
        } catch (TimeoutException e) {
            log("trace");
        } catch (IOException e) {
            if (counter > 3) {
                send("msg4");
                new S030();
            }
            update();
        } finally {
            new S083();
        }
    }

    public void reset() {
        log("trace");
        if (counter > 6) {
            new Abstract6();
        } else {
            try {
                switch (event) {
                    case EV4:
                        new S042();
                        new S004();
                        log("trace");
                        break;
                }
            } catch (IOException e) {
                new S054();
            }
        }
    }

    public void pause() {
        log("trace");
    }

    public void resume() {
        if (counter > 6) {
            new S077();
            try {
                log("trace");
                send("msg4");
                new S054();
            } finally {
                new S065();
                try {
                    new S008();
                    new S012();
                    new S015();
                } finally {
                    new S097();
                    send("msg1");
                }
                new S071();
            }
        } else {
            if (counter > 5) {
                if (counter > 5) {
                    update();
                } else {
                    new S052();
                    new S055();
                }
                log("trace");
            }
            send("msg0");
            new S094();
        }
        new S051();
    }

    public void load() {
        try {
            if (counter > 7) {
                log("trace");
                log("trace");
            } else {
                send("msg3");
                try {
                    new S006();
                } catch (IllegalStateException e) {
                    send("msg0");
                    log("trace");
                    send("msg2");
                } catch (TimeoutException e) {
                    send("msg0");
                    new S009();
                    update();
                }
            }
            try {
                send("msg4");
            } catch (TimeoutException e) {
                try {
                    new S054();
                    send("msg4");
                    send("msg1");
                } catch (IOException e) {
                    new S034();
                } catch (TimeoutException e) {
                    log("trace");
                } finally {
                    new Abstract24();
                }
            } catch (IOException e) {
                log("trace");
                new S037();
                send("msg5");
            }
        } catch (IllegalStateException e) {
            log("trace");
            if (counter > 3) {
                log("trace");
            } else {
                send("msg2");
                send("msg2");
            }
        }
        switch (event) {
            case EV3:
                if (counter > 9) {
                    switch (event) {
                        case EV5:
                            update();
                            send("msg6");
                            send("msg1");
                            break;
                        case EV4:
                            send("msg0");
                            break;
                    }
                } else {
                    send("msg6");
                    switch (event) {
                        case EV0:
                            log("trace");
                            send("msg5");
                            send("msg6");
                            break;
                        case EV3:
                            new S075();
                            update();
                            new S082();
                            break;
                    }
                    send("msg0");
                }
                break;
            case EV1:
                if (counter > 3) {
                    switch (event) {
                        case EV2:
                            new S080();
                            new S010();
                            break;
                        case EV3:
                            new S023();
                            new S026();
                            break;
                        case EV1:
                            send("msg1");
                            break;
                        default:
                            update();
                            break;
                    }
                    new S022();
                } else {
                    if (counter > 2) {
                        send("msg2");
                        send("msg2");
                        new S034();
                    }
                    new S015();
                }
                send("msg5");
                send("msg2");
                break;
            case EV0:
                send("msg6");
                break;
            default:
                send("msg5");
                log("trace");
                new S022();
                break;
        }
    }

    public void save() {
        send("msg3");
        switch (event) {
            case EV2:
                new S073();
                send("msg4");
                try {
                    if (counter > 1) {
                        update();
                    }
                    switch (event) {
                        case EV0:
                            send("msg1");
                            break;
                        case EV4:
                            send("msg3");
                            break;
                        case EV3:
                            log("trace");
                            send("msg1");
                            send("msg2");
                            break;
                    }
                } catch (IllegalStateException e) {
                    send("msg6");
                } catch (IOException e) {
                    new Abstract4();
                    new S024();
                    try {
                        send("msg6");
                        update();
                        new S087();
                    } finally {
                        new S006();
                    }
                }
                break;
            case EV0:
                send("msg4");
                break;
        }
        try {
            send("msg3");
            new S065();
            new S047();
        } catch (IOException e) {
            new S018();
        } catch (TimeoutException e) {
            send("msg6");
            send("msg3");
        }
    }
}
